#include "arcstrip/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

namespace arcstrip {

namespace {

i64 iabs(i64 v) { return v < 0 ? -v : v; }

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string param_str(i64 v) {
  if (v >= kInf) return "inf";
  if (v <= -kInf) return "-inf";
  return std::to_string(v);
}

}  // namespace

std::string BoundCert::str() const {
  return point.str() + " " + to_string(direction);
}

// ---------------------------------------------------------------------------
// Boundedness conditions

namespace {

i64 cert_index(const IntervalSet& bad) {
  auto [lo, hi] = bad.intervals().front();
  if (lo > -kInf) return lo;
  if (hi < kInf) return hi;
  return 0;
}

// One implication "escaping-unbounded forces required-unbounded", checked
// pointwise along a boundary.  On failure fills the certificate with a
// concrete point where the set escapes without the partner.
bool containment_holds(const ArcSet& t, Boundary bd, BoundDirection escaping,
                       BoundDirection required, CondReport& out) {
  IntervalSet esc = t.unbounded_point_set(bd, escaping);
  IntervalSet bad = esc.intersect(t.unbounded_point_set(bd, required).complement());
  if (bad.is_empty()) return true;
  out.holds = false;
  out.cert = BoundCert{MarkedPoint{bd, cert_index(bad)}, escaping};
  return false;
}

}  // namespace

CondReport cond_B(const ArcSet& t) {
  CondReport r{true, {}};
  for (Boundary bd : {Boundary::Upper, Boundary::Lower}) {
    if (!containment_holds(t, bd, BoundDirection::UpperRight,
                           BoundDirection::LowerRight, r))
      return r;
    if (!containment_holds(t, bd, BoundDirection::LowerLeft,
                           BoundDirection::UpperLeft, r))
      return r;
  }
  return r;
}

CondReport cond_Bprime(const ArcSet& t) {
  CondReport r{true, {}};
  for (Boundary bd : {Boundary::Upper, Boundary::Lower}) {
    if (!containment_holds(t, bd, BoundDirection::UpperLeft,
                           BoundDirection::LowerLeft, r))
      return r;
    if (!containment_holds(t, bd, BoundDirection::LowerRight,
                           BoundDirection::UpperRight, r))
      return r;
  }
  return r;
}

bool cond_C(const ArcSet& t) {
  if (!t.conn_region_stored().is_empty()) return true;
  return !t.nc().conn_region_stored().is_empty();
}

bool is_tau_compact(const ArcSet& t) {
  if (!t.is_ptolemy())
    throw InputError("tau-compactness criterion requires a Ptolemy diagram");
  return cond_B(t).holds && cond_C(t);
}

bool is_tau_inv_compact(const ArcSet& t) {
  if (!t.is_ptolemy())
    throw InputError("tau-compactness criterion requires a Ptolemy diagram");
  return cond_Bprime(t).holds && cond_C(t);
}

// ---------------------------------------------------------------------------
// Fan minima

FanUnboundedError::FanUnboundedError(MarkedPoint p, BoundDirection dir)
    : InputError("fan at " + p.str() + " has no minimum: unbounded toward " +
                 to_string(dir)),
      point(p),
      direction(dir) {}

namespace {

// Rebuilds the curve at p described by a fan class and a far index.  The
// far index p-1 in class 0 and p+1 in class 2 name the boundary edges.
ArcOrEdge curve_from_class(MarkedPoint p, int cls, i64 far) {
  bool up = p.boundary == Boundary::Upper;
  if (cls == 0 && far == p.index - 1)
    return up ? ArcOrEdge::upper_edge(far) : ArcOrEdge::lower_edge(far);
  if (cls == 2 && far == p.index + 1)
    return up ? ArcOrEdge::upper_edge(p.index) : ArcOrEdge::lower_edge(p.index);
  switch (cls) {
    case 0:
      return up ? ArcOrEdge::upper_arc(far, p.index)
                : ArcOrEdge::lower_arc(far, p.index);
    case 1:
      return up ? ArcOrEdge::conn_arc(p.index, far)
                : ArcOrEdge::conn_arc(far, p.index);
    default:
      return up ? ArcOrEdge::upper_arc(p.index, far)
                : ArcOrEdge::lower_arc(p.index, far);
  }
}

// Where a fan class escapes to when its far indices grow without bound.
BoundDirection class_escape_dir(MarkedPoint p, int cls) {
  bool up = p.boundary == Boundary::Upper;
  if (cls == 1)
    return up ? BoundDirection::LowerLeft : BoundDirection::UpperRight;
  return up ? BoundDirection::UpperRight : BoundDirection::LowerLeft;
}

}  // namespace

std::optional<ArcOrEdge> fan_min(const ArcSet& t, MarkedPoint p,
                                 std::optional<ArcOrEdge> strictly_above) {
  ArcSet::FanSlices s = t.fan_slices(p);
  const IntervalSet* cls[3] = {&s.toward_lesser, &s.opposite,
                               &s.toward_greater};
  if (!strictly_above) {
    for (int c = 0; c < 3; ++c) {
      if (cls[c]->is_empty()) continue;
      if (!cls[c]->bounded_above())
        throw FanUnboundedError(p, class_escape_dir(p, c));
      return curve_from_class(p, c, cls[c]->max());
    }
    return std::nullopt;
  }
  const ArcOrEdge& u = *strictly_above;
  if (!u.has_endpoint(p))
    throw InputError("pivot " + u.str() + " does not end at " + p.str());
  FanKey k = fan_key(p, u);
  i64 pivot_far = -k.tiebreak;
  for (int c = k.cls; c < 3; ++c) {
    // members and, in the outer classes, the adjacent boundary edge
    IntervalSet cand = *cls[c];
    if (c == 0)
      cand = cand.union_with(IntervalSet::interval(p.index - 1, p.index - 1));
    if (c == 2)
      cand = cand.union_with(IntervalSet::interval(p.index + 1, p.index + 1));
    if (c == k.cls)
      cand = cand.intersect(IntervalSet::interval(-kInf, pivot_far - 1));
    if (cand.is_empty()) continue;
    if (!cand.bounded_above())
      throw FanUnboundedError(p, class_escape_dir(p, c));
    return curve_from_class(p, c, cand.max());
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Basis verification

namespace {

void check_sigma(const std::vector<ArcOrEdge>& sigma, const ArcSet& omega) {
  for (const ArcOrEdge& s : sigma) {
    if (!s.is_arc())
      throw InputError("basis element " + s.str() + " is not an arc");
    if (!omega.member(s))
      throw InputError("basis element " + s.str() +
                       " is not a member of the covered set");
  }
}

bool middle_ok(const ArcSet& omega, const ArcOrEdge& m) {
  return m.is_edge() || omega.member(m);
}

// Whether s covers u: u must cross the shift of s, and when u also crosses
// s itself both middle sides of that crossing must lie in omega or be
// boundary edges.
bool serves(const ArcOrEdge& s, const ArcOrEdge& u, const ArcSet& omega) {
  if (!crosses(u, tau_arc(s))) return false;
  if (!crosses(u, s)) return true;
  auto [m1, m2] = middle_terms(s, u);
  return middle_ok(omega, m1) && middle_ok(omega, m2);
}

bool is_tau_basis_concrete(const std::vector<ArcOrEdge>& sigma,
                           const ArcSet& omega) {
  for (const ArcOrEdge& u : omega.enumerate_all()) {
    bool ok = false;
    for (const ArcOrEdge& s : sigma)
      if (serves(s, u, omega)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

/*
 * Symbolic route.  For a fixed basis element s, the covered members u split
 * into those crossing tau(s) but not s (covered outright) and those
 * crossing both, which must pass the middle-term test.  The latter live in
 * one of ten axis-box patterns (by the kinds of s and u) and within one
 * pattern the two middle terms have a fixed shape: one endpoint anchored
 * at an endpoint of s, the other sliding with one coordinate of u.  The
 * shape is read off a concrete sample of the pattern at run time, and the
 * middle-term test becomes one interval band per middle term.
 */

struct CrossPattern {
  ArcKind family;  // family of the covered arc u
  Zone box;        // standard-coordinate axis box of u's pair
  ArcOrEdge sample;
};

std::vector<CrossPattern> cross_patterns(const ArcOrEdge& s) {
  i64 a = s.a(), b = s.b();
  auto box = [](i64 xlo, i64 xhi, i64 ylo, i64 yhi) {
    return *Zone::make(xlo, xhi, ylo, yhi);
  };
  std::vector<CrossPattern> ps;
  switch (s.kind()) {
    case ArcKind::UpperArc:
      ps.push_back({ArcKind::UpperArc, box(-kInf, a - 1, a + 1, b - 1),
                    ArcOrEdge::upper_arc(a - 1, a + 1)});
      ps.push_back({ArcKind::UpperArc, box(a + 1, b - 1, b + 1, kInf),
                    ArcOrEdge::upper_arc(b - 1, b + 1)});
      ps.push_back({ArcKind::ConnArc, box(a + 1, b - 1, -kInf, kInf),
                    ArcOrEdge::conn_arc(a + 1, 0)});
      break;
    case ArcKind::LowerArc:
      ps.push_back({ArcKind::LowerArc, box(-kInf, a - 1, a + 1, b - 1),
                    ArcOrEdge::lower_arc(a - 1, a + 1)});
      ps.push_back({ArcKind::LowerArc, box(a + 1, b - 1, b + 1, kInf),
                    ArcOrEdge::lower_arc(b - 1, b + 1)});
      ps.push_back({ArcKind::ConnArc, box(-kInf, kInf, a + 1, b - 1),
                    ArcOrEdge::conn_arc(0, a + 1)});
      break;
    case ArcKind::ConnArc:
      ps.push_back({ArcKind::UpperArc, box(-kInf, a - 1, a + 1, kInf),
                    ArcOrEdge::upper_arc(a - 1, a + 1)});
      ps.push_back({ArcKind::LowerArc, box(-kInf, b - 1, b + 1, kInf),
                    ArcOrEdge::lower_arc(b - 1, b + 1)});
      ps.push_back({ArcKind::ConnArc, box(-kInf, a - 1, -kInf, b - 1),
                    ArcOrEdge::conn_arc(a - 1, b - 1)});
      ps.push_back({ArcKind::ConnArc, box(a + 1, kInf, b + 1, kInf),
                    ArcOrEdge::conn_arc(a + 1, b + 1)});
      break;
    default:
      break;
  }
  return ps;
}

// Interval of allowed values -> region over u's pair, constraining the
// named coordinate (in u's storage convention).
Region band_region(bool var_is_x, const IntervalSet& ok, ArcKind family,
                   ConnChir chir) {
  Region r;
  for (auto [lo, hi] : ok.intervals()) {
    std::optional<Zone> z;
    if (var_is_x)
      z = Zone::make(lo, hi, -kInf, kInf);
    else if (family == ArcKind::ConnArc && chir == ConnChir::Mir)
      z = Zone::make(-kInf, kInf, sat_neg(hi), sat_neg(lo));
    else
      z = Zone::make(-kInf, kInf, lo, hi);
    if (z) r = r.union_with(Region::of(z));
  }
  return r;
}

// Band of u-values whose middle term (the one shaped like `mid`, read off
// the pattern sample) lies in omega or is a boundary edge.
Region middle_band(const ArcOrEdge& s, const CrossPattern& pat,
                   const ArcOrEdge& mid, const ArcSet& omega) {
  auto [e1, e2] = mid.endpoints();
  bool e1_on_s = s.has_endpoint(e1);
  MarkedPoint anchor = e1_on_s ? e1 : e2;
  MarkedPoint var = e1_on_s ? e2 : e1;
  bool var_is_x = pat.sample.kind() == ArcKind::ConnArc
                      ? var.boundary == Boundary::Upper
                      : var.index == pat.sample.a();
  i64 c = anchor.index;
  IntervalSet ok;
  if (anchor.boundary == var.boundary) {
    // own-boundary middle (c, v) or (v, c); v = c +- 1 gives an edge
    const Region& reg = anchor.boundary == Boundary::Upper
                            ? omega.upper_region()
                            : omega.lower_region();
    ok = var.index > c ? slice_at_x(reg, c) : slice_at_y(reg, c);
    ok = ok.union_with(IntervalSet::interval(c - 1, c - 1));
    ok = ok.union_with(IntervalSet::interval(c + 1, c + 1));
  } else {
    // connecting middle; slice the stored region along the anchor
    const Region& co = omega.conn_region_stored();
    bool mir = omega.chirality() == ConnChir::Mir;
    if (anchor.boundary == Boundary::Upper) {
      ok = slice_at_x(co, c);
      if (mir) ok = ok.negate();
    } else {
      ok = mir ? slice_at_y(co, -c) : slice_at_y(co, c);
    }
  }
  return band_region(var_is_x, ok, pat.family, omega.chirality());
}

void add_symbolic_cover(const ArcOrEdge& s, const ArcSet& omega,
                        Region& cov_up, Region& cov_lo, Region& cov_co) {
  ConnChir chir = omega.chirality();
  ArcSet a = cross_region(tau_arc(s), chir);
  ArcSet x = cross_region(s, chir);
  cov_up = cov_up.union_with(a.upper_region().difference(x.upper_region()));
  cov_lo = cov_lo.union_with(a.lower_region().difference(x.lower_region()));
  cov_co = cov_co.union_with(
      a.conn_region_stored().difference(x.conn_region_stored()));
  for (const CrossPattern& pat : cross_patterns(s)) {
    auto [m1, m2] = middle_terms(s, pat.sample);
    Region band = middle_band(s, pat, m1, omega)
                      .intersect(middle_band(s, pat, m2, omega));
    Region boxr =
        pat.family == ArcKind::ConnArc && chir == ConnChir::Mir
            ? Region::of(Zone::make(pat.box.x_lo, pat.box.x_hi,
                                    sat_neg(pat.box.y_hi),
                                    sat_neg(pat.box.y_lo)))
            : Region::of(pat.box);
    const Region& a_part = pat.family == ArcKind::UpperArc ? a.upper_region()
                           : pat.family == ArcKind::LowerArc
                               ? a.lower_region()
                               : a.conn_region_stored();
    Region add = a_part.intersect(boxr).intersect(band);
    if (pat.family == ArcKind::UpperArc)
      cov_up = cov_up.union_with(add);
    else if (pat.family == ArcKind::LowerArc)
      cov_lo = cov_lo.union_with(add);
    else
      cov_co = cov_co.union_with(add);
  }
}

}  // namespace

namespace detail {

bool is_tau_basis_symbolic(const std::vector<ArcOrEdge>& sigma,
                           const ArcSet& omega) {
  check_sigma(sigma, omega);
  Region cov_up, cov_lo, cov_co;
  for (const ArcOrEdge& s : sigma)
    add_symbolic_cover(s, omega, cov_up, cov_lo, cov_co);
  return omega.upper_region().subset_of(cov_up) &&
         omega.lower_region().subset_of(cov_lo) &&
         omega.conn_region_stored().subset_of(cov_co);
}

}  // namespace detail

bool is_tau_basis(const std::vector<ArcOrEdge>& sigma, const ArcSet& omega) {
  check_sigma(sigma, omega);
  if (omega.is_finite()) return is_tau_basis_concrete(sigma, omega);
  return detail::is_tau_basis_symbolic(sigma, omega);
}

bool is_tau_inv_basis(const std::vector<ArcOrEdge>& sigma,
                      const ArcSet& omega) {
  check_sigma(sigma, omega);
  std::vector<ArcOrEdge> ms;
  ms.reserve(sigma.size());
  for (const ArcOrEdge& s : sigma) ms.push_back(mirror_arc(s));
  return is_tau_basis(ms, omega.mirror_lr());
}

// ---------------------------------------------------------------------------
// Basis construction

namespace {

constexpr std::size_t kWideCap = 100000;

struct BuildOutcome {
  enum class Status { Ok, Escape, InfiniteAnchors };
  Status status = Status::Ok;
  std::vector<ArcOrEdge> sigma;
  MarkedPoint point{};
  BoundDirection dir = BoundDirection::UpperRight;
};

std::vector<i64> enumerate_points(const IntervalSet& s) {
  std::size_t n = 0;
  for (auto [lo, hi] : s.intervals()) {
    if (lo <= -kInf || hi >= kInf || std::size_t(hi - lo) >= kWideCap ||
        (n += std::size_t(hi - lo + 1)) > kWideCap)
      throw InputError("presentation too wide to certify");
  }
  std::vector<i64> out;
  out.reserve(n);
  for (auto [lo, hi] : s.intervals())
    for (i64 v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

// Appends the fan minimum at pt (if the fan is nonempty); converts a
// missing minimum into an escape outcome.
bool add_fan_min(const ArcSet& omega, MarkedPoint pt, BuildOutcome& out) {
  try {
    if (auto m = fan_min(omega, pt)) out.sigma.push_back(*m);
    return true;
  } catch (const FanUnboundedError& e) {
    out.status = BuildOutcome::Status::Escape;
    out.point = e.point;
    out.dir = e.direction;
    return false;
  }
}

// The six standard-coordinate bounds of a stored connecting zone.  For a
// mirrored set y = -y~, and the diagonal bounds come from the corner sums
// of the canonical form.
struct StdBounds {
  i64 x_lo, x_hi, y_lo, y_hi, d_lo, d_hi;
};

StdBounds std_conn_bounds(const Zone& z, ConnChir chir) {
  if (chir == ConnChir::Std)
    return {z.x_lo, z.x_hi, z.y_lo, z.y_hi, z.d_lo, z.d_hi};
  return {z.x_lo,
          z.x_hi,
          sat_neg(z.y_hi),
          sat_neg(z.y_lo),
          sat_neg(sat_add(z.x_hi, z.y_hi)),
          sat_neg(sat_add(z.x_lo, z.y_lo))};
}

IntervalSet std_conn_y_values(const ArcSet& t) {
  IntervalSet ys = project_y(t.conn_region_stored());
  return t.chirality() == ConnChir::Mir ? ys.negate() : ys;
}

/*
 * Basis contribution for the crossers with an upper endpoint right of p
 * (the other side is handled by conjugating with the half turn).  For each
 * such endpoint l_p' the anchor q(p') is the far endpoint of the fan
 * minimum at l_p', and the contribution is the fan minimum at the anchor.
 * Beyond an explicitly computed index the anchors repeat, so only finitely
 * many fans are inspected even when the endpoint range is infinite.
 */
BuildOutcome z1_side(const ArcSet& omega, i64 p, i64 q) {
  BuildOutcome out;
  // endpoints whose fan minimum cannot exist at all: connecting arcs
  // unbounded to the lower left with nothing in the class before them
  IntervalSet esc =
      omega.unbounded_point_set(Boundary::Upper, BoundDirection::LowerLeft)
          .intersect(IntervalSet::interval(p + 1, kInf))
          .intersect(project_y(omega.upper_region()).complement());
  if (!esc.is_empty()) {
    out.status = BuildOutcome::Status::Escape;
    out.point = upper_point(esc.min());
    out.dir = BoundDirection::LowerLeft;
    return out;
  }
  // anchors stabilize past twice the largest finite bound (slice ends are
  // sums of two bounds) plus the target's own indices
  i64 bmax = 0;
  auto acc = [&bmax](i64 v) {
    if (v > -kInf && v < kInf) bmax = std::max(bmax, iabs(v));
  };
  for (const Zone& z : omega.upper_region().zones()) {
    acc(z.x_lo), acc(z.x_hi), acc(z.y_lo), acc(z.y_hi), acc(z.d_lo),
        acc(z.d_hi);
  }
  for (const Zone& z : omega.conn_region_stored().zones()) {
    StdBounds b = std_conn_bounds(z, omega.chirality());
    acc(b.x_lo), acc(b.x_hi), acc(b.y_lo), acc(b.y_hi), acc(b.d_lo),
        acc(b.d_hi);
  }
  i64 pstar = 2 * bmax + iabs(p) + iabs(q) + 4;
  if (pstar - p > i64(kWideCap))
    throw InputError("presentation too wide to certify");

  IntervalSet d1 = project_y(omega.upper_region())
                       .union_with(project_x(omega.conn_region_stored()))
                       .intersect(IntervalSet::interval(p + 1, kInf));
  std::vector<MarkedPoint> anchors;
  for (i64 pp :
       enumerate_points(d1.intersect(IntervalSet::interval(p + 1, pstar)))) {
    IntervalSet cls0 = slice_at_y(omega.upper_region(), pp);
    if (!cls0.is_empty()) {
      anchors.push_back(upper_point(cls0.max()));
      continue;
    }
    IntervalSet cls1 = omega.fan_slices(upper_point(pp)).opposite;
    if (cls1.is_empty()) continue;
    if (!cls1.bounded_above()) {
      // unreachable: the escape pre-scan covers this
      out.status = BuildOutcome::Status::Escape;
      out.point = upper_point(pp);
      out.dir = BoundDirection::LowerLeft;
      return out;
    }
    anchors.push_back(lower_point(cls1.max()));
  }
  if (!d1.bounded_above()) {
    // one extra anchor stands in for every endpoint past pstar
    bool up_alive = false;
    i64 xstar = -kInf;
    for (const Zone& z : omega.upper_region().zones())
      if (z.y_hi >= kInf && z.d_hi >= kInf) {
        up_alive = true;
        xstar = std::max(xstar, z.x_hi);
      }
    if (up_alive) {
      anchors.push_back(upper_point(xstar));
    } else {
      bool far_anchors_unbounded = false, co_alive = false;
      i64 ystar = -kInf;
      for (const Zone& z : omega.conn_region_stored().zones()) {
        StdBounds b = std_conn_bounds(z, omega.chirality());
        if (b.x_hi >= kInf && b.y_hi >= kInf) far_anchors_unbounded = true;
        if (b.x_hi >= kInf && b.y_hi < kInf && b.d_lo <= -kInf) {
          co_alive = true;
          ystar = std::max(ystar, b.y_hi);
        }
      }
      if (far_anchors_unbounded) {
        out.status = BuildOutcome::Status::InfiniteAnchors;
        return out;
      }
      if (!co_alive)
        throw InternalInvariantError(
            "unbounded endpoint range without a persistent zone");
      anchors.push_back(lower_point(ystar));
    }
  }
  for (const MarkedPoint& a : anchors)
    if (!add_fan_min(omega, a, out)) return out;
  return out;
}

BoundDirection half_turn_dir(BoundDirection d) {
  switch (d) {
    case BoundDirection::UpperLeft: return BoundDirection::LowerLeft;
    case BoundDirection::LowerLeft: return BoundDirection::UpperLeft;
    case BoundDirection::UpperRight: return BoundDirection::LowerRight;
    case BoundDirection::LowerRight: return BoundDirection::UpperRight;
  }
  std::abort();
}

BuildOutcome map_half_turn(BuildOutcome o) {
  for (ArcOrEdge& s : o.sigma) s = half_turn_arc(s);
  if (o.status == BuildOutcome::Status::Escape) {
    o.point = o.point.boundary == Boundary::Upper
                  ? lower_point(-o.point.index)
                  : upper_point(-o.point.index);
    o.dir = half_turn_dir(o.dir);
  }
  return o;
}

// Nearest connecting arc of ncy to (p, q) in the Chebyshev metric on the
// index pair, ties broken by the lexicographically least standard pair.
std::pair<i64, i64> closest_conn_point(const ArcSet& ncy, i64 p, i64 q) {
  const Region& r = ncy.conn_region_stored();
  bool mir = ncy.chirality() == ConnChir::Mir;
  i64 tx = p, ty = mir ? -q : q;
  // clamping into one zone bounds the radius, then bisect down to minimal
  const Zone& z = r.zones().front();
  i64 xc = std::clamp(tx, z.x_lo, z.x_hi);
  i64 yc = std::clamp(ty, std::max(z.y_lo, sat_add(xc, z.d_lo)),
                      std::min(z.y_hi, sat_add(xc, z.d_hi)));
  i64 lo = 0, hi = std::max(iabs(xc - tx), iabs(yc - ty));
  auto feasible = [&](i64 rad) {
    return !r.intersect(Region::of(Zone::make(tx - rad, tx + rad, ty - rad,
                                              ty + rad)))
                .is_empty();
  };
  while (lo < hi) {
    i64 mid = lo + (hi - lo) / 2;
    if (feasible(mid)) hi = mid;
    else lo = mid + 1;
  }
  Region inter = r.intersect(
      Region::of(Zone::make(tx - lo, tx + lo, ty - lo, ty + lo)));
  i64 xs = project_x(inter).min();
  IntervalSet ys = slice_at_x(inter, xs);
  return {xs, mir ? -ys.max() : ys.min()};
}

// Finite generating family of fan minima for the crossers of w in y, or
// an escape certificate when some deciding fan has no minimum.
BuildOutcome build_tau_basis(const ArcSet& y, const ArcOrEdge& w) {
  ArcSet omega = crossers_in(y, w);
  BuildOutcome out;
  if (omega.is_empty()) return out;
  if (w.kind() == ArcKind::UpperArc || w.kind() == ArcKind::LowerArc) {
    // every crosser ends strictly inside w's span
    if (w.b() - w.a() > i64(kWideCap))
      throw InputError("presentation too wide to certify");
    bool up = w.kind() == ArcKind::UpperArc;
    for (i64 m = w.a() + 1; m <= w.b() - 1; ++m)
      if (!add_fan_min(omega, up ? upper_point(m) : lower_point(m), out))
        return out;
  } else {
    i64 p = w.a(), q = w.b();
    IntervalSet d1 = project_y(omega.upper_region())
                         .union_with(project_x(omega.conn_region_stored()))
                         .intersect(IntervalSet::interval(p + 1, kInf));
    IntervalSet d2 = project_x(omega.lower_region())
                         .union_with(std_conn_y_values(omega))
                         .intersect(IntervalSet::interval(-kInf, q - 1));
    if (d1.bounded_above() && d2.bounded_below()) {
      // every crosser ends at one of finitely many points next to w
      for (i64 m : enumerate_points(d1))
        if (!add_fan_min(omega, upper_point(m), out)) return out;
      for (i64 m : enumerate_points(d2))
        if (!add_fan_min(omega, lower_point(m), out)) return out;
    } else if (!y.nc().conn_region_stored().is_empty()) {
      // every crosser ends between w and the nearest noncrossing
      // connecting arc
      auto [i, j] = closest_conn_point(y.nc(), p, q);
      if (iabs(i - p) + iabs(j - q) + 2 > i64(kWideCap))
        throw InputError("presentation too wide to certify");
      for (i64 m = std::min(p, i); m <= std::max(p, i); ++m)
        if (!add_fan_min(omega, upper_point(m), out)) return out;
      for (i64 m = std::min(q, j); m <= std::max(q, j); ++m)
        if (!add_fan_min(omega, lower_point(m), out)) return out;
    } else {
      BuildOutcome side1 = z1_side(omega, p, q);
      if (side1.status != BuildOutcome::Status::Ok) return side1;
      BuildOutcome side2 = map_half_turn(z1_side(omega.half_turn(), -q, -p));
      if (side2.status != BuildOutcome::Status::Ok) return side2;
      out.sigma = std::move(side1.sigma);
      out.sigma.insert(out.sigma.end(), side2.sigma.begin(),
                       side2.sigma.end());
    }
  }
  std::sort(out.sigma.begin(), out.sigma.end());
  out.sigma.erase(std::unique(out.sigma.begin(), out.sigma.end()),
                  out.sigma.end());
  return out;
}

}  // namespace

std::vector<ArcOrEdge> tau_basis_of_crossers(const ArcSet& t,
                                             const ArcOrEdge& w) {
  if (!w.is_arc())
    throw InputError("crossing target " + w.str() + " is not an arc");
  if (!is_tau_compact(t)) throw InputError("the set is not tau-compact");
  BuildOutcome out = build_tau_basis(t, w);
  if (out.status != BuildOutcome::Status::Ok)
    throw InternalInvariantError(
        "basis construction failed on a tau-compact set");
  if (!is_tau_basis(out.sigma, crossers_in(t, w)))
    throw InternalInvariantError("constructed basis failed verification");
  return out.sigma;
}

std::vector<ArcOrEdge> tau_inv_basis_of_crossers(const ArcSet& t,
                                                 const ArcOrEdge& w) {
  if (!w.is_arc())
    throw InputError("crossing target " + w.str() + " is not an arc");
  if (!is_tau_inv_compact(t))
    throw InputError("the set is not tau-inverse-compact");
  std::vector<ArcOrEdge> sigma =
      tau_basis_of_crossers(t.mirror_lr(), mirror_arc(w));
  for (ArcOrEdge& s : sigma) s = mirror_arc(s);
  std::sort(sigma.begin(), sigma.end());
  return sigma;
}

ApproxResult left_approx_summands(const ArcSet& y, const ArcOrEdge& u) {
  if (!u.is_arc())
    throw InputError("approximation target " + u.str() + " is not an arc");
  ArcOrEdge w = tau_arc(u);
  BuildOutcome out = build_tau_basis(y, w);
  if (out.status == BuildOutcome::Status::Escape) return {false, {}};
  if (out.status == BuildOutcome::Status::InfiniteAnchors ||
      !is_tau_basis(out.sigma, crossers_in(y, w)))
    throw InputError(
        "cannot certify a left approximation for this presentation");
  return {true, out.sigma};
}

// ---------------------------------------------------------------------------
// Pair classifiers

bool is_cotorsion(const ArcSet& x, const ArcSet& y) {
  bool via_x = x.is_ptolemy() && cond_Bprime(x).holds && cond_C(x) &&
               y.equals(x.nc());
  bool via_y = y.is_ptolemy() && cond_B(y).holds && cond_C(y) &&
               x.equals(y.nc());
  if (via_x != via_y)
    throw InternalInvariantError("cotorsion characterizations disagree");
  return via_x;
}

bool is_torsion(const ArcSet& x, const ArcSet& y) {
  return is_cotorsion(x, y.tau(-1));
}

ArcSet core_of(const ArcSet& x, const ArcSet& y) { return x.intersect(y); }

ArcSet heart_of(const ArcSet& x, const ArcSet& y) {
  return x.tau(-1).intersect(y.tau(1));
}

bool is_t_structure(const ArcSet& x, const ArcSet& y) {
  bool cot = is_cotorsion(x, y);
  bool r1 = cot && core_of(x, y).is_empty();
  bool r2 = cot && x.tau(1).subset_of(x);
  if (r1 != r2)
    throw InternalInvariantError("t-structure characterizations disagree");
  return r1;
}

std::pair<ArcSet, ArcSet> t_structure(i64 p, i64 q, TSide side) {
  if (side == TSide::LeftAperture) {
    if (p <= -kInf || q <= -kInf)
      throw InputError("left-aperture parameters live in Z plus +inf");
    ArcSet x;
    if (p < kInf) x.add_upper_zone(*Zone::make(p, kInf, -kInf, kInf));
    if (q < kInf) x.add_lower_zone(*Zone::make(q, kInf, -kInf, kInf));
    return {x, x.nc()};
  }
  if (p >= kInf || q >= kInf)
    throw InputError("right-aperture parameters live in Z plus -inf");
  ArcSet y;
  if (p > -kInf) y.add_upper_zone(*Zone::make(-kInf, kInf, -kInf, p));
  if (q > -kInf) y.add_lower_zone(*Zone::make(-kInf, kInf, -kInf, q));
  return {y.nc(), y};
}

std::optional<TParams> t_params(const ArcSet& x, const ArcSet& y) {
  if (x.conn_region_stored().is_empty()) {
    bool shaped = true;
    i64 p = kInf, q = kInf;
    if (!x.upper_region().is_empty()) {
      IntervalSet s = project_x(x.upper_region());
      if (s.bounded_below()) p = s.min();
      else shaped = false;
    }
    if (shaped && !x.lower_region().is_empty()) {
      IntervalSet s = project_x(x.lower_region());
      if (s.bounded_below()) q = s.min();
      else shaped = false;
    }
    if (shaped) {
      auto [xx, yy] = t_structure(p, q, TSide::LeftAperture);
      if (x.equals(xx) && y.equals(yy))
        return TParams{p, q, TSide::LeftAperture};
    }
  }
  if (y.conn_region_stored().is_empty()) {
    bool shaped = true;
    i64 p = -kInf, q = -kInf;
    if (!y.upper_region().is_empty()) {
      IntervalSet s = project_y(y.upper_region());
      if (s.bounded_above()) p = s.max();
      else shaped = false;
    }
    if (shaped && !y.lower_region().is_empty()) {
      IntervalSet s = project_y(y.lower_region());
      if (s.bounded_above()) q = s.max();
      else shaped = false;
    }
    if (shaped) {
      auto [xx, yy] = t_structure(p, q, TSide::RightAperture);
      if (x.equals(xx) && y.equals(yy))
        return TParams{p, q, TSide::RightAperture};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Triangulations and the summary report

std::string to_string(TriangulationStatus s) {
  switch (s) {
    case TriangulationStatus::None: return "None";
    case TriangulationStatus::Partial: return "Partial";
    case TriangulationStatus::Full: return "Full";
    case TriangulationStatus::CompactPartial: return "CompactPartial";
    case TriangulationStatus::CompactFull: return "CompactFull";
  }
  std::abort();
}

TriangulationStatus triangulation_status(const ArcSet& t) {
  if (!t.is_noncrossing()) return TriangulationStatus::None;
  bool full = t.nc().equals(t);
  bool compact = cond_B(t).holds && cond_Bprime(t).holds && cond_C(t);
  if (compact)
    return full ? TriangulationStatus::CompactFull
                : TriangulationStatus::CompactPartial;
  return full ? TriangulationStatus::Full : TriangulationStatus::Partial;
}

std::string ClassificationReport::str() const {
  std::string s;
  s += "ptolemy: " + yn(is_ptolemy) + "\n";
  s += "cond B: " + yn(cond_b);
  if (cert_b) s += " (" + cert_b->str() + ")";
  s += "\ncond B': " + yn(cond_bprime);
  if (cert_bprime) s += " (" + cert_bprime->str() + ")";
  s += "\ncond C: " + yn(cond_c) + "\n";
  s += "tau compact: " + yn(tau_compact) + "\n";
  s += "tau-inv compact: " + yn(tau_inv_compact) + "\n";
  s += "cotorsion partner: " +
       (cotorsion_partner ? cotorsion_partner->str() : std::string("none")) +
       "\n";
  if (t_params)
    s += "t-structure: p=" + param_str(t_params->p) +
         " q=" + param_str(t_params->q) + " side=" +
         (t_params->side == TSide::LeftAperture ? "left" : "right") + "\n";
  else
    s += "t-structure: none\n";
  s += "triangulation: " + to_string(triangulation) + "\n";
  return s;
}

ClassificationReport classify_report(const ArcSet& t) {
  ClassificationReport r;
  ArcSet nct = t.nc();
  r.is_ptolemy = t.is_ptolemy();
  CondReport b = cond_B(t);
  r.cond_b = b.holds;
  r.cert_b = b.cert;
  CondReport bp = cond_Bprime(t);
  r.cond_bprime = bp.holds;
  r.cert_bprime = bp.cert;
  r.cond_c = !t.conn_region_stored().is_empty() ||
             !nct.conn_region_stored().is_empty();
  r.tau_compact = r.is_ptolemy && r.cond_b && r.cond_c;
  r.tau_inv_compact = r.is_ptolemy && r.cond_bprime && r.cond_c;
  if (r.tau_compact || r.tau_inv_compact) r.cotorsion_partner = nct;
  auto tp = t_params(t, nct);
  if (!tp) tp = t_params(nct, t);
  r.t_params = tp;
  r.is_t_structure = tp.has_value();
  if (!t.is_noncrossing()) {
    r.triangulation = TriangulationStatus::None;
  } else {
    bool full = nct.equals(t);
    bool compact = r.cond_b && r.cond_bprime && r.cond_c;
    r.triangulation = compact ? (full ? TriangulationStatus::CompactFull
                                      : TriangulationStatus::CompactPartial)
                              : (full ? TriangulationStatus::Full
                                      : TriangulationStatus::Partial);
  }
  return r;
}

}  // namespace arcstrip
