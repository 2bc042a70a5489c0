#include "arcstrip/ng.hpp"

#include <utility>

#include "arcstrip/classify.hpp"
#include "arcstrip/errors.hpp"

namespace arcstrip {

namespace {

const Zone kChordValidity = *Zone::make(-kInf, kInf, -kInf, kInf, 2, kInf);

void require_conn(const ArcOrEdge& u) {
  if (!u.is_arc() || u.kind() != ArcKind::ConnArc)
    throw InputError("sector transport needs a connecting arc, got " +
                     u.str());
}

}  // namespace

void NgArcSet::add_chord(i64 m, i64 n) {
  if (n - m < 2)
    throw InputError("chord endpoints must be at least two apart");
  region = region.union_with(Region::of(Zone::point(m, n)));
}

void NgArcSet::add_zone(const Zone& z) {
  region = region.union_with(Region::of(z.intersect(kChordValidity)));
}

bool NgArcSet::member(i64 m, i64 n) const { return region.contains(m, n); }

std::vector<std::pair<i64, i64>> NgArcSet::enumerate_all(
    std::size_t cap) const {
  return region.enumerate(cap);
}

bool ng_crosses(std::pair<i64, i64> a, std::pair<i64, i64> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

bool ng_cond_i(const NgArcSet& t) {
  // chords cross and recombine exactly like one boundary's arcs
  ArcSet up;
  for (const Zone& z : t.region.zones()) up.add_upper_zone(z);
  return up.is_ptolemy();
}

bool ng_cond_f(const NgArcSet& t) {
  IntervalSet bases, tips;
  for (const Zone& z : t.region.zones()) {
    // unbounded column: chords (x, y) with y arbitrarily large
    if (z.y_hi >= kInf && z.d_hi >= kInf)
      bases = bases.union_with(IntervalSet::interval(z.x_lo, z.x_hi));
    // unbounded row: chords (x, y) with x arbitrarily small
    if (z.x_lo <= -kInf && z.d_hi >= kInf)
      tips = tips.union_with(IntervalSet::interval(z.y_lo, z.y_hi));
  }
  return bases.subset_of(tips);
}

i64 phi(const ArcOrEdge& u, MarkedPoint pt) {
  require_conn(u);
  if (pt.boundary == Boundary::Upper) {
    if (pt.index > u.a())
      throw InputError("point " + pt.str() + " is not in the sector of " +
                       u.str());
    return u.a() - pt.index + 1;
  }
  if (pt.index < u.b())
    throw InputError("point " + pt.str() + " is not in the sector of " +
                     u.str());
  return u.b() - pt.index;
}

MarkedPoint phi_inv(const ArcOrEdge& u, i64 k) {
  require_conn(u);
  if (k >= 1) return upper_point(u.a() - k + 1);
  return lower_point(u.b() - k);
}

ArcOrEdge phi_inv_arc(const ArcOrEdge& u, i64 m, i64 n) {
  if (m >= n) throw InputError("chord endpoints must be increasing");
  return ArcOrEdge::join(phi_inv(u, m), phi_inv(u, n));
}

ArcSet phi_inv_set(const ArcOrEdge& u, const NgArcSet& t, ConnChir chir) {
  require_conn(u);
  i64 p = u.a(), q = u.b();
  ArcSet out(chir);
  // both endpoints upper: chords with m >= 1
  Region part = t.region.intersect(Region::of(Zone::make(1, kInf, -kInf,
                                                         kInf)));
  Region mapped = part.low_mirror().translate(p + 1, p + 1);
  for (const Zone& z : mapped.zones()) out.add_upper_zone(z);
  // both endpoints lower: chords with n <= 0
  part = t.region.intersect(Region::of(Zone::make(-kInf, kInf, -kInf, 0)));
  mapped = part.low_mirror().translate(q, q);
  for (const Zone& z : mapped.zones()) out.add_lower_zone(z);
  // mixed: chords with m <= 0 and n >= 1
  part = t.region.intersect(Region::of(Zone::make(-kInf, 0, 1, kInf)));
  mapped = part.low_mirror().translate(p + 1, q);
  for (const Zone& z : mapped.zones()) out.add_conn_zone(z);
  return out;
}

std::pair<ArcSet, ArcSet> split_sides(const ArcOrEdge& u) {
  require_conn(u);
  i64 p = u.a(), q = u.b();
  ArcSet just_u = ArcSet::of({u});
  ArcSet left;
  left.add_upper_zone(*Zone::make(-kInf, kInf, -kInf, p));
  left.add_lower_zone(*Zone::make(q, kInf, -kInf, kInf));
  left.add_conn_zone(*Zone::make(-kInf, p, q, kInf));
  ArcSet right;
  right.add_upper_zone(*Zone::make(p, kInf, -kInf, kInf));
  right.add_lower_zone(*Zone::make(-kInf, kInf, -kInf, q));
  right.add_conn_zone(*Zone::make(p, kInf, -kInf, q));
  return {left.difference(just_u), right.difference(just_u)};
}

bool ng_torsion_check(const NgArcSet& t, const ArcOrEdge& u) {
  require_conn(u);
  bool native = ng_cond_i(t) && ng_cond_f(t);
  ArcSet pulled = phi_inv_set(u, t);
  pulled.add_arc(u);
  bool transported = pulled.is_ptolemy() && cond_Bprime(pulled).holds;
  if (native != transported)
    throw InternalInvariantError(
        "chord-side and strip-side torsion checks disagree");
  return native;
}

ArcSet fan_triangulation(const ArcOrEdge& u) {
  require_conn(u);
  i64 s = u.a() + u.b();
  ArcSet out(ConnChir::Mir);
  out.add_conn_zone_stored(*Zone::make(-kInf, kInf, -kInf, kInf, -s, -s));
  out.add_conn_zone_stored(
      *Zone::make(-kInf, kInf, -kInf, kInf, -s + 1, -s + 1));
  return out;
}

}  // namespace arcstrip
