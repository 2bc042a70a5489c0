// The symbolic arc-set engine against everything built before it: the
// case tables must reproduce the scalar crossing rules arc by arc, the
// noncrossing complement must match the direct interval oracle and brute
// loops on finite data, and the frozen example regions must come out
// byte-identical.  Mirrored storage must be invisible at the level of
// membership.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "arcstrip/arcset.hpp"
#include "arcstrip/errors.hpp"
#include "arcstrip/oracle.hpp"

using namespace arcstrip;

namespace {
auto U = ArcOrEdge::upper_arc;
auto L = ArcOrEdge::lower_arc;
auto C = ArcOrEdge::conn_arc;

Zone zn(i64 x_lo, i64 x_hi, i64 y_lo, i64 y_hi, i64 d_lo = -kInf,
        i64 d_hi = kInf) {
  auto z = Zone::make(x_lo, x_hi, y_lo, y_hi, d_lo, d_hi);
  REQUIRE(z.has_value());
  return *z;
}

std::vector<ArcOrEdge> sample_t1() {
  return {U(-2, 1), C(-2, 2), C(-2, -2), C(1, 2), C(1, -2), L(-2, 2)};
}

ArcSet t1_set() { return ArcSet::of(sample_t1()); }

ArcSet t2_set() {
  ArcSet t = t1_set();
  t.add_upper_zone(zn(1, 1, 3, kInf));
  return t;
}

ArcSet t3_set() {
  ArcSet t = t1_set();
  t.add_conn_zone(zn(1, 1, -kInf, -5));
  return t;
}

// Closure by explicit recombination of arc lists, for cross-checking.
std::set<ArcOrEdge> brute_closure(std::vector<ArcOrEdge> arcs) {
  std::set<ArcOrEdge> s(arcs.begin(), arcs.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ArcOrEdge> cur(s.begin(), s.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (!crosses(cur[i], cur[j])) continue;
        for (const ArcOrEdge& c : corners(cur[i], cur[j]))
          if (s.insert(c).second) grew = true;
      }
  }
  return s;
}

std::vector<ArcOrEdge> random_arcs(std::mt19937& rng, int count, i64 lo,
                                   i64 hi) {
  std::uniform_int_distribution<i64> idx(lo, hi);
  std::uniform_int_distribution<int> kind(0, 2);
  std::set<ArcOrEdge> out;
  while ((int)out.size() < count) {
    i64 a = idx(rng), b = idx(rng);
    switch (kind(rng)) {
      case 0:
        if (std::abs(a - b) >= 2) out.insert(U(std::min(a, b), std::max(a, b)));
        break;
      case 1:
        if (std::abs(a - b) >= 2) out.insert(L(std::min(a, b), std::max(a, b)));
        break;
      default:
        out.insert(C(a, b));
        break;
    }
  }
  return {out.begin(), out.end()};
}
}  // namespace

TEST_CASE("membership, add, enumerate") {
  ArcSet t = t1_set();
  for (const ArcOrEdge& u : sample_t1()) CHECK(t.member(u));
  CHECK_FALSE(t.member(U(0, 2)));
  CHECK_FALSE(t.member(C(1, 1)));
  CHECK_THROWS_AS(t.member(ArcOrEdge::upper_edge(0)), InputError);
  CHECK_THROWS_AS(t.add_arc(ArcOrEdge::lower_edge(3)), InputError);
  CHECK(t.is_finite());
  CHECK_FALSE(t.is_empty());
  CHECK(ArcSet().is_empty());

  auto listed = t.enumerate_all();
  std::vector<ArcOrEdge> want = sample_t1();
  std::sort(want.begin(), want.end());
  CHECK(listed == want);

  // Window enumeration agrees with membership filtering.
  Window w(-3, 3);
  auto in_window = t.enumerate_window(w);
  std::vector<ArcOrEdge> expect;
  for (const ArcOrEdge& v : window_arcs(w))
    if (t.member(v)) expect.push_back(v);
  std::sort(expect.begin(), expect.end());
  CHECK(in_window == expect);

  CHECK_THROWS_AS(t2_set().enumerate_all(), InputError);
  CHECK(t2_set().enumerate_window(Window(-2, 4)).size() ==
        t.enumerate_window(Window(-2, 4)).size() + 2);  // U(1,3), U(1,4)
}

TEST_CASE("set algebra and tau") {
  ArcSet a = ArcSet::of({U(0, 2), C(1, 1)});
  ArcSet b = ArcSet::of({C(1, 1), L(-2, 2)});
  CHECK(a.intersect(b).equals(ArcSet::of({C(1, 1)})));
  CHECK(a.union_with(b).equals(ArcSet::of({U(0, 2), C(1, 1), L(-2, 2)})));
  CHECK(a.difference(b).equals(ArcSet::of({U(0, 2)})));
  CHECK(a.intersect(b).subset_of(a));
  CHECK_FALSE(a.subset_of(b));

  ArcSet shifted = a.tau(3);
  CHECK(shifted.member(U(3, 5)));
  CHECK(shifted.member(C(4, 4)));
  CHECK(shifted.tau(-3).equals(a));

  // tau on an infinite family moves the presentation, not the size.
  ArcSet t2 = t2_set();
  CHECK(t2.tau(2).member(U(3, 6)));
  CHECK_FALSE(t2.tau(2).member(U(1, 4)));
  CHECK(t2.tau(2).tau(-2).equals(t2));
}

TEST_CASE("cross_region matches the scalar rules on a window") {
  auto pool = window_arcs(Window(-3, 3));
  auto probe = window_arcs(Window(-5, 5));
  for (const ArcOrEdge& u : pool) {
    ArcSet cs = cross_region(u, ConnChir::Std);
    ArcSet cm = cross_region(u, ConnChir::Mir);
    for (const ArcOrEdge& v : probe) {
      bool want = crosses(u, v);
      if (cs.member(v) != want || cm.member(v) != want) {
        CAPTURE(u.str());
        CAPTURE(v.str());
        CHECK(cs.member(v) == want);
        CHECK(cm.member(v) == want);
      }
    }
  }
  CHECK(true);
}

TEST_CASE("cross_region frozen presentations") {
  ArcSet c00 = cross_region(C(0, 0));
  Region straddle({zn(-kInf, -1, 1, kInf, 2, kInf)});
  CHECK(c00.upper_region().equals(straddle));
  CHECK(c00.lower_region().equals(straddle));
  CHECK(c00.conn_region_std().equals(
      Region({zn(1, kInf, 1, kInf), zn(-kInf, -1, -kInf, -1)})));

  ArcSet u02 = cross_region(U(0, 2));
  CHECK(u02.conn_region_std().equals(Region({zn(1, 1, -kInf, kInf)})));
  CHECK(u02.upper_region().equals(
      Region({zn(1, 1, 3, kInf), zn(-kInf, -1, 1, 1)})));
  CHECK(u02.lower_region().is_empty());

  // Edges cross nothing.
  CHECK(cross_region(ArcOrEdge::upper_edge(4)).is_empty());
}

TEST_CASE("crossers of an infinite family") {
  // All crossers of the vertical family C(1, q), q <= -5.
  ArcSet t3 = t3_set();
  ArcSet hits = crossers_in(t3, L(-7, 3));
  // L(-7,3) crosses the conn members whose lower index lies strictly
  // inside (-7, 3): all four finite ones plus C(1,-5) and C(1,-6).
  CHECK(hits.member(C(1, -5)));
  CHECK(hits.member(C(1, -6)));
  CHECK_FALSE(hits.member(C(1, -7)));
  CHECK(hits.member(C(1, -2)));
  CHECK(hits.member(C(-2, -2)));
  CHECK(hits.member(C(-2, 2)));
  CHECK(hits.member(C(1, 2)));
  CHECK_FALSE(hits.member(U(-2, 1)));
  CHECK(hits.is_finite());
  CHECK(hits.enumerate_all().size() == 6);
}

TEST_CASE("nc matches the interval oracle and brute loops") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 60; ++trial) {
    auto arcs = random_arcs(rng, 1 + trial % 7, -5, 5);
    ArcSet t = ArcSet::of(arcs);
    ArcSet n = t.nc();
    for (const ArcOrEdge& v : window_arcs(Window(-6, 6))) {
      bool direct = true;
      for (const ArcOrEdge& u : arcs) direct = direct && !crosses(u, v);
      bool via_regions = n.member(v);
      bool via_oracle = member_nc_oracle(t, v);
      if (direct != via_regions || direct != via_oracle) {
        CAPTURE(trial);
        CAPTURE(v.str());
        REQUIRE(direct == via_regions);
        REQUIRE(direct == via_oracle);
      }
    }
    CHECK(t.is_noncrossing() == brute_noncrossing(arcs));
    CHECK(t.is_ptolemy() == brute_is_ptolemy(arcs));
    CHECK(t.subset_of(t.nc().nc()));
    CHECK(n.nc().nc().equals(n));
  }
}

TEST_CASE("nc frozen presentations") {
  ArcSet one = ArcSet::of({C(0, 0)});
  ArcSet n = one.nc();
  Region up_want({zn(-kInf, kInf, -kInf, 0, 2, kInf),
                  zn(0, kInf, -kInf, kInf, 2, kInf)});
  Region co_want({zn(-kInf, 0, 0, kInf), zn(0, kInf, -kInf, 0)});
  CHECK(n.upper_region().equals(up_want));
  CHECK(n.lower_region().equals(up_want));
  CHECK(n.conn_region_std().equals(co_want));

  // The half-plane pair: upper arcs right of 1, lower arcs right of 0.
  ArcSet x;
  x.add_upper_zone(zn(1, kInf, -kInf, kInf));
  x.add_lower_zone(zn(0, kInf, -kInf, kInf));
  ArcSet y = x.nc();
  CHECK(y.upper_region().equals(
      Region({zn(-kInf, kInf, -kInf, 1, 2, kInf)})));
  CHECK(y.lower_region().equals(
      Region({zn(-kInf, kInf, -kInf, 0, 2, kInf)})));
  CHECK(y.conn_region_std().equals(Region({zn(-kInf, 1, -kInf, 0)})));

  // The half-plane pair is already closed: no connecting arc survives
  // against the quadrant (for any C(p,q), the member C(min(1,p-1),
  // min(0,q-1)) of y crosses it), so nc(nc(x)) gives back x exactly.
  ArcSet xx = y.nc();
  CHECK(xx.equals(x));
  CHECK(xx.nc().equals(y));
}

TEST_CASE("nc is tau-equivariant and antitone") {
  ArcSet t2 = t2_set();
  CHECK(t2.tau(3).nc().equals(t2.nc().tau(3)));
  for (const ArcOrEdge& u : window_arcs(Window(-2, 2)))
    CHECK(cross_region(tau_arc(u, 5)).equals(cross_region(u).tau(5)));

  ArcSet small = ArcSet::of({C(0, 0)});
  ArcSet big = ArcSet::of({C(0, 0), U(-3, 0), L(1, 4)});
  CHECK(big.nc().subset_of(small.nc()));
  CHECK(small.subset_of(small.nc().nc()));
  CHECK(big.subset_of(big.nc().nc()));
}

TEST_CASE("ptolemy predicate and closure vs brute force") {
  CHECK(t1_set().is_ptolemy());
  CHECK_FALSE(t1_set().is_noncrossing());

  // Dropping any side of the crossing square breaks the property.
  auto arcs = sample_t1();
  for (const ArcOrEdge& drop : {U(-2, 1), C(-2, 2), C(1, -2), L(-2, 2)}) {
    std::vector<ArcOrEdge> rest;
    for (const ArcOrEdge& u : arcs)
      if (!(u == drop)) rest.push_back(u);
    CHECK_FALSE(ArcSet::of(rest).is_ptolemy());
  }

  ArcSet two = ArcSet::of({U(1, 3), U(0, 2)});
  ArcSet closed = two.ptolemy_closure();
  CHECK(closed.equals(ArcSet::of({U(1, 3), U(0, 2), U(0, 3)})));
  CHECK(closed.is_ptolemy());

  std::mt19937 rng(20240813);
  for (int trial = 0; trial < 40; ++trial) {
    auto seed = random_arcs(rng, 2 + trial % 5, -4, 4);
    ArcSet closure = ArcSet::of(seed).ptolemy_closure();
    auto want = brute_closure(seed);
    CHECK(closure.is_ptolemy());
    CHECK(brute_is_ptolemy({want.begin(), want.end()}));
    auto got = closure.enumerate_all();
    CHECK(std::set<ArcOrEdge>(got.begin(), got.end()) == want);
    CHECK(closure.ptolemy_closure().equals(closure));
  }

  CHECK_THROWS_AS(t2_set().ptolemy_closure(), InputError);
}

TEST_CASE("ptolemy on infinite presentations") {
  // A full fan of connecting arcs at one upper point never crosses itself.
  ArcSet fan(ConnChir::Std);
  fan.add_conn_zone(zn(0, 0, -kInf, kInf));
  CHECK(fan.is_noncrossing());
  CHECK(fan.is_ptolemy());

  // Two opposite quadrants of connecting arcs cross; their corners are
  // connecting arcs of the mixed quadrants plus boundary arcs, so the
  // union is far from closed.
  ArcSet quads(ConnChir::Std);
  quads.add_conn_zone(zn(2, kInf, 2, kInf));
  quads.add_conn_zone(zn(-kInf, -2, -kInf, -2));
  CHECK_FALSE(quads.is_noncrossing());
  CHECK_FALSE(quads.is_ptolemy());
  ArcSet step = quads.corners_closure_step();
  CHECK(step.member(C(2, -2)));
  CHECK(step.member(C(-2, 2)));
  CHECK(step.member(U(-2, 2)));
  CHECK(step.member(L(-2, 2)));
  CHECK_FALSE(step.member(C(1, 1)));

  ArcSet t2 = t2_set();
  CHECK(t2.is_ptolemy());
  ArcSet t3 = t3_set();
  CHECK(t3.is_ptolemy());

  // Removing one corner of the crossing square breaks closure, even with
  // the infinite family still present.
  ArcSet broken = t2.difference(ArcSet::of({U(-2, 1)}));
  CHECK_FALSE(broken.is_ptolemy());
  // Removing the crossing pair itself leaves no crossing at all.
  ArcSet calm = t2.difference(ArcSet::of({C(1, 2)}));
  CHECK(calm.is_noncrossing());
  CHECK(calm.is_ptolemy());
}

TEST_CASE("fan slices") {
  ArcSet t1 = t1_set();
  auto at_l1 = t1.fan_slices(upper_point(1));
  CHECK(at_l1.toward_lesser == IntervalSet::interval(-2, -2));
  CHECK(at_l1.opposite ==
        IntervalSet::interval(-2, -2).union_with(IntervalSet::interval(2, 2)));
  CHECK(at_l1.toward_greater.is_empty());

  auto at_r2 = t1.fan_slices(lower_point(2));
  CHECK(at_r2.toward_lesser == IntervalSet::interval(-2, -2));
  CHECK(at_r2.opposite ==
        IntervalSet::interval(-2, -2).union_with(IntervalSet::interval(1, 1)));
  CHECK(at_r2.toward_greater.is_empty());

  auto t2_l1 = t2_set().fan_slices(upper_point(1));
  CHECK(t2_l1.toward_greater == IntervalSet::interval(3, kInf));
  CHECK_FALSE(t2_l1.toward_greater.bounded_above());

  auto t3_l1 = t3_set().fan_slices(upper_point(1));
  CHECK(t3_l1.opposite ==
        IntervalSet::interval(-kInf, -5)
            .union_with(IntervalSet::interval(-2, -2))
            .union_with(IntervalSet::interval(2, 2)));
}

TEST_CASE("boundedness per direction") {
  ArcSet t2 = t2_set();
  CHECK(t2.unbounded_point_set(Boundary::Upper, BoundDirection::UpperRight) ==
        IntervalSet::interval(1, 1));
  CHECK(t2.unbounded_point_set(Boundary::Upper, BoundDirection::UpperLeft)
            .is_empty());
  CHECK(t2.unbounded_point_set(Boundary::Upper, BoundDirection::LowerLeft)
            .is_empty());
  CHECK(t2.unbounded_point_set(Boundary::Lower, BoundDirection::LowerLeft)
            .is_empty());
  CHECK_FALSE(t2.bounded_at(upper_point(1), BoundDirection::UpperRight));
  CHECK(t2.bounded_at(upper_point(0), BoundDirection::UpperRight));
  CHECK(t2.bounded_at(upper_point(1), BoundDirection::UpperLeft));

  ArcSet t3 = t3_set();
  CHECK(t3.unbounded_point_set(Boundary::Upper, BoundDirection::LowerRight) ==
        IntervalSet::interval(1, 1));
  CHECK(t3.unbounded_point_set(Boundary::Upper, BoundDirection::LowerLeft)
            .is_empty());
  CHECK(t3.unbounded_point_set(Boundary::Lower, BoundDirection::UpperRight)
            .is_empty());
  CHECK(t3.unbounded_point_set(Boundary::Lower, BoundDirection::UpperLeft)
            .is_empty());

  // Left-opening upper family: arcs (a, b) with a <= 3, b in [7, 9].
  ArcSet fam;
  fam.add_upper_zone(zn(-kInf, 3, 7, 9));
  CHECK(fam.unbounded_point_set(Boundary::Upper, BoundDirection::UpperLeft) ==
        IntervalSet::interval(7, 9));
  CHECK(fam.unbounded_point_set(Boundary::Upper, BoundDirection::UpperRight)
            .is_empty());

  // Lower families and the connecting-direction table.
  ArcSet lows;
  lows.add_lower_zone(zn(2, 5, -kInf, kInf));
  CHECK(lows.unbounded_point_set(Boundary::Lower, BoundDirection::LowerLeft) ==
        IntervalSet::interval(2, 5));
  CHECK(lows.unbounded_point_set(Boundary::Lower, BoundDirection::LowerRight)
            .is_empty());

  ArcSet conns;
  conns.add_conn_zone(zn(-kInf, kInf, -3, -3));
  CHECK(conns.unbounded_point_set(Boundary::Lower,
                                  BoundDirection::UpperRight) ==
        IntervalSet::interval(-3, -3));
  CHECK(conns.unbounded_point_set(Boundary::Lower,
                                  BoundDirection::UpperLeft) ==
        IntervalSet::interval(-3, -3));
  CHECK(conns.unbounded_point_set(Boundary::Upper, BoundDirection::LowerLeft)
            .is_empty());
}

TEST_CASE("mirrored storage is invisible to membership") {
  // Same arcs, both conventions: every query must agree.
  auto arcs = sample_t1();
  ArcSet s = ArcSet::of(arcs);
  ArcSet m(ConnChir::Mir);
  for (const ArcOrEdge& u : arcs) m.add_arc(u);
  CHECK(m.chirality() == ConnChir::Mir);
  CHECK(s.equals(m));
  CHECK(m.equals(s));
  CHECK(m.is_ptolemy());
  CHECK_FALSE(m.is_noncrossing());
  CHECK(m.enumerate_window(Window(-3, 3)) == s.enumerate_window(Window(-3, 3)));

  ArcSet nm = m.nc();
  ArcSet ns = s.nc();
  for (const ArcOrEdge& v : window_arcs(Window(-5, 5)))
    CHECK(nm.member(v) == ns.member(v));

  // Anti-diagonal family: representable only mirrored.
  ArcSet diag(ConnChir::Mir);
  diag.add_conn_zone_stored(zn(-kInf, kInf, -kInf, kInf, 0, 0));  // a + b = 0
  CHECK(diag.member(C(3, -3)));
  CHECK(diag.member(C(-5, 5)));
  CHECK_FALSE(diag.member(C(2, -1)));
  CHECK_THROWS_AS(diag.coerce(ConnChir::Std), InputError);
  CHECK(diag.is_noncrossing());

  ArcSet shifted = diag.tau(1);  // a + b = 2
  CHECK(shifted.member(C(1, 1)));
  CHECK_FALSE(shifted.member(C(3, -3)));

  // Mixed-chirality algebra aligns automatically when possible.
  ArcSet both = diag.union_with(s);
  CHECK(both.chirality() == ConnChir::Mir);
  CHECK(both.member(C(3, -3)));
  CHECK(both.member(C(1, 2)));
  // C(-2,2) is the one member of the sample lying on the anti-diagonal.
  CHECK(diag.intersect(s).equals(ArcSet::of({C(-2, 2)})));

  // Boundedness of the anti-diagonal family, phrased per direction: at
  // every upper point there is exactly one member, so every direction is
  // bounded; mirrored storage must not confuse the scan.
  CHECK(diag.unbounded_point_set(Boundary::Upper, BoundDirection::LowerLeft)
            .is_empty());
  CHECK(diag.unbounded_point_set(Boundary::Upper, BoundDirection::LowerRight)
            .is_empty());
  CHECK(diag.unbounded_point_set(Boundary::Lower, BoundDirection::UpperLeft)
            .is_empty());
  CHECK(diag.unbounded_point_set(Boundary::Lower, BoundDirection::UpperRight)
            .is_empty());

  // A mirrored half-line of connecting arcs at one point is unbounded.
  ArcSet ray(ConnChir::Mir);
  ray.add_conn_zone(zn(1, 1, -kInf, -5));
  CHECK(ray.equals(t3_set().intersect(ray)));
  CHECK(ray.unbounded_point_set(Boundary::Upper, BoundDirection::LowerRight) ==
        IntervalSet::interval(1, 1));
  CHECK(ray.unbounded_point_set(Boundary::Upper, BoundDirection::LowerLeft)
            .is_empty());
}

TEST_CASE("mirrored crossing engine agrees with standard") {
  // Run nc on mirrored copies of random finite sets and compare pointwise.
  std::mt19937 rng(20240814);
  for (int trial = 0; trial < 25; ++trial) {
    auto arcs = random_arcs(rng, 1 + trial % 6, -4, 4);
    ArcSet s = ArcSet::of(arcs);
    ArcSet m(ConnChir::Mir);
    for (const ArcOrEdge& u : arcs) m.add_arc(u);
    ArcSet ns = s.nc(), nm = m.nc();
    for (const ArcOrEdge& v : window_arcs(Window(-5, 5)))
      REQUIRE(ns.member(v) == nm.member(v));
    CHECK(s.is_ptolemy() == m.is_ptolemy());
    CHECK(s.is_noncrossing() == m.is_noncrossing());
  }

  // And the closure, through the mirror and back.
  ArcSet two(ConnChir::Mir);
  two.add_arc(C(1, 1));
  two.add_arc(C(0, 0));
  ArcSet closed = two.ptolemy_closure();
  CHECK(closed.equals(ArcSet::of({C(1, 1), C(0, 0), C(1, 0), C(0, 1)})));
}

TEST_CASE("coercion round trips") {
  ArcSet t1 = t1_set();
  CHECK(t1.coerce(ConnChir::Mir).coerce(ConnChir::Std).equals(t1));
  CHECK(t1.coerce(ConnChir::Mir).chirality() == ConnChir::Mir);
  CHECK(t1.coerce(ConnChir::Std).chirality() == ConnChir::Std);

  // Quadrants and rows survive the mirror; live diagonals on infinite
  // zones do not.
  ArcSet quad;
  quad.add_conn_zone(zn(2, kInf, 2, kInf));
  CHECK(quad.coerce(ConnChir::Mir).coerce(ConnChir::Std).equals(quad));
  ArcSet band;
  band.add_conn_zone(zn(-kInf, kInf, -kInf, kInf, 0, 0));  // b = a
  CHECK_THROWS_AS(band.coerce(ConnChir::Mir), InputError);
}

TEST_CASE("set-level symmetries match the scalar maps") {
  std::mt19937 rng(20240815);
  for (int trial = 0; trial < 20; ++trial) {
    auto arcs = random_arcs(rng, 1 + trial % 6, -4, 4);
    ArcSet s = ArcSet::of(arcs);
    if (trial % 3 == 0) s.add_upper_zone(zn(1, 1, 3, kInf));
    if (trial % 3 == 1) s.add_conn_zone(zn(1, 1, -kInf, -5));
    ArcSet m = s.mirror_lr(), h = s.half_turn();
    for (const ArcOrEdge& v : window_arcs(Window(-6, 6))) {
      REQUIRE(m.member(mirror_arc(v)) == s.member(v));
      REQUIRE(h.member(half_turn_arc(v)) == s.member(v));
    }
    CHECK(m.mirror_lr().equals(s));
    CHECK(h.half_turn().equals(s));
    CHECK(s.tau(1).mirror_lr().equals(m.tau(-1)));
    CHECK(s.tau(1).half_turn().equals(h.tau(-1)));
    CHECK(m.nc().equals(s.nc().mirror_lr()));
    CHECK(h.nc().equals(s.nc().half_turn()));
  }

  // Mirrored storage: both symmetries stay exact on anti-diagonal zones.
  ArcSet fan(ConnChir::Mir);
  fan.add_conn_zone_stored(zn(-kInf, kInf, -kInf, kInf, -3, -3));
  fan.add_conn_zone_stored(zn(0, kInf, -kInf, kInf, -4, -4));
  ArcSet fm = fan.mirror_lr(), fh = fan.half_turn();
  CHECK(fm.chirality() == ConnChir::Mir);
  for (const ArcOrEdge& v : window_arcs(Window(-8, 8))) {
    if (v.kind() != ArcKind::ConnArc) continue;
    REQUIRE(fm.member(mirror_arc(v)) == fan.member(v));
    REQUIRE(fh.member(half_turn_arc(v)) == fan.member(v));
  }
  CHECK(fm.mirror_lr().equals(fan));
  CHECK(fh.half_turn().equals(fan));
}
