// Bridge to the chord model of the infinite polygon.  A connecting arc
// cuts the strip into two sectors; the marked points weakly on its lesser
// side line up into a single bi-infinite fan, indexed here by the
// integers, and the arcs drawn inside that sector become chords (m, n)
// with n - m >= 2.  The transport is exact on zones, so presentations of
// infinite chord sets move back and forth without enumeration.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arcstrip/arcset.hpp"
#include "arcstrip/strip_model.hpp"
#include "arcstrip/zones.hpp"

namespace arcstrip {

// Finitely presented set of chords of the infinite polygon.
struct NgArcSet {
  Region region;  // canonical zones over chord pairs (m, n), n - m >= 2

  void add_chord(i64 m, i64 n);
  // Clipped against chord validity n - m >= 2.
  void add_zone(const Zone& z);
  bool member(i64 m, i64 n) const;
  bool is_empty() const { return region.is_empty(); }
  bool is_finite() const { return region.is_finite(); }
  std::vector<std::pair<i64, i64>> enumerate_all(
      std::size_t cap = 200000) const;
};

// Chord crossing: strict interleaving of the endpoint pairs.
bool ng_crosses(std::pair<i64, i64> a, std::pair<i64, i64> b);

// Closure of the chord set under recombination of crossing pairs (the
// same condition the strip families satisfy, checked symbolically).
bool ng_cond_i(const NgArcSet& t);

// Every vertex emitting infinitely many chords forward also receives
// infinitely many from behind: zone patterns decide both sides exactly.
bool ng_cond_f(const NgArcSet& t);

// Index transport along a connecting arc u = (p, q): upper points at or
// left of l_p count up from 1, lower points at or left of r_q count down
// from 0.  Points on the other side of u are rejected.
i64 phi(const ArcOrEdge& u, MarkedPoint pt);
MarkedPoint phi_inv(const ArcOrEdge& u, i64 k);

// Chord (m, n), m < n, pulled back to the curve joining the transported
// endpoints (an arc, or a boundary edge when the chord is short).
ArcOrEdge phi_inv_arc(const ArcOrEdge& u, i64 m, i64 n);

// Whole-set pullback, zone by zone.
ArcSet phi_inv_set(const ArcOrEdge& u, const NgArcSet& t,
                   ConnChir chir = ConnChir::Std);

// All arcs weakly on the lesser side of u and all arcs weakly on the
// greater side (u itself belongs to neither).  The two halves never cross.
std::pair<ArcSet, ArcSet> split_sides(const ArcOrEdge& u);

// Whether the chord set names a torsion-shaped family in the sector cut
// out by u.  Decided once natively on chords and once by pulling back to
// the strip; the two verdicts are cross-checked.
bool ng_torsion_check(const NgArcSet& t, const ArcOrEdge& u);

// The fan triangulation through u: every connecting arc on u's
// anti-diagonal and on the one just below it.
ArcSet fan_triangulation(const ArcOrEdge& u);

}  // namespace arcstrip
