#pragma once

/*
 * Finitely presented, possibly infinite sets of arcs.  Each of the three
 * arc families is stored as a region of integer pairs:
 *
 *   upper arcs (a, b)  ->  points (a, b) with b - a >= 2
 *   lower arcs (a, b)  ->  points (a, b) with b - a >= 2
 *   conn  arcs (a, b)  ->  points (a, b), or (a, -b) in a mirrored set
 *
 * The mirrored storage exists because some natural diagrams (the fan
 * triangulations of connecting arcs) live on anti-diagonals a + b = const,
 * which difference-bound zones cannot cut in standard coordinates but cut
 * trivially after negating one coordinate.  Upper and lower regions are
 * always stored in standard coordinates regardless of the flag.
 *
 * All queries (membership, crossings, the noncrossing complement nc, the
 * recombination closure) are computed exactly on the region presentation;
 * no operation here ever enumerates an infinite family.
 */

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "arcstrip/strip_model.hpp"
#include "arcstrip/zones.hpp"

namespace arcstrip {

enum class ConnChir { Std, Mir };

enum class BoundDirection { UpperLeft, UpperRight, LowerLeft, LowerRight };

std::string to_string(BoundDirection dir);

class ArcSet {
 public:
  ArcSet() = default;
  explicit ArcSet(ConnChir chir) : chir_(chir) {}
  static ArcSet of(std::initializer_list<ArcOrEdge> arcs);
  static ArcSet of(const std::vector<ArcOrEdge>& arcs);

  ConnChir chirality() const { return chir_; }
  const Region& upper_region() const { return up_; }
  const Region& lower_region() const { return lo_; }
  // Connecting region in stored coordinates: (a, b) for Std, (a, -b) for
  // Mir.  Use conn_region_std() for a chirality-independent view.
  const Region& conn_region_stored() const { return co_; }
  Region conn_region_std() const;

  void add_arc(const ArcOrEdge& u);
  // Zones are clipped against the family's validity (b - a >= 2 for the
  // boundary families).  Connecting zones are interpreted in standard
  // coordinates; for a mirrored set they are converted, which can throw
  // for zones a mirrored set cannot represent.
  void add_upper_zone(const Zone& z);
  void add_lower_zone(const Zone& z);
  void add_conn_zone(const Zone& z);
  // Connecting zone already in this set's stored coordinates.
  void add_conn_zone_stored(const Zone& z);

  bool member(const ArcOrEdge& u) const;  // arcs only; edges are an error
  bool is_empty() const;
  bool is_finite() const;
  std::size_t zone_count() const {
    return up_.size() + lo_.size() + co_.size();
  }

  ArcSet union_with(const ArcSet& o) const;
  ArcSet intersect(const ArcSet& o) const;
  ArcSet difference(const ArcSet& o) const;
  bool subset_of(const ArcSet& o) const;
  bool equals(const ArcSet& o) const;

  ArcSet tau(i64 k = 1) const;

  // Images under the two index-reversing symmetries of the strip (see
  // mirror_arc and half_turn_arc).  Both are exact on zones and keep the
  // stored chirality.
  ArcSet mirror_lr() const;
  ArcSet half_turn() const;

  // Change the storage convention for the connecting region.  Throws
  // InputError when the set is not representable the other way.
  ArcSet coerce(ConnChir chir) const;

  // Members with all indices inside the window, sorted (uppers, lowers,
  // conns; lexicographic within a family).
  std::vector<ArcOrEdge> enumerate_window(const Window& w) const;
  // All members of a finite set, same order.  Throws on infinite sets.
  std::vector<ArcOrEdge> enumerate_all(std::size_t cap = 200000) const;

  // The noncrossing complement: every arc crossing no member of this set.
  ArcSet nc() const;

  bool is_noncrossing() const;

  // Whether every crossing pair of members has all four of its
  // recombination sides that are arcs in the set as well.
  bool is_ptolemy() const;

  // Adds the recombination sides of every crossing pair once / until
  // stable.  Closure requires a finite set.
  ArcSet corners_closure_step() const;
  ArcSet ptolemy_closure() const;

  // Fan boundedness at a marked point.  bounded_at(p, dir) asks whether
  // the arcs of this set leaving p toward the given corner of the strip
  // form a bounded family; unbounded_point_set collects, per boundary, the
  // indices where they do not.
  bool bounded_at(MarkedPoint p, BoundDirection dir) const;
  IntervalSet unbounded_point_set(Boundary boundary,
                                  BoundDirection dir) const;

  // Index sets of the three fan classes at p: members reaching the
  // lesser-index side of p's boundary, the opposite boundary, and the
  // greater-index side.  Each set lists the far endpoint's index.
  struct FanSlices {
    IntervalSet toward_lesser;   // class 0
    IntervalSet opposite;        // class 1
    IntervalSet toward_greater;  // class 2
  };
  FanSlices fan_slices(MarkedPoint p) const;

  std::string str() const;

 private:
  Region up_, lo_, co_;
  ConnChir chir_ = ConnChir::Std;
  // Binary ops need matching chirality; this coerces `o` toward *this or
  // *this toward `o`, whichever succeeds first.
  static std::pair<ArcSet, ArcSet> aligned(const ArcSet& a, const ArcSet& b);
};

// All arcs crossing u, as a set in the requested chirality.
ArcSet cross_region(const ArcOrEdge& u, ConnChir chir = ConnChir::Std);

// Members of t crossing u.
ArcSet crossers_in(const ArcSet& t, const ArcOrEdge& u);

}  // namespace arcstrip
