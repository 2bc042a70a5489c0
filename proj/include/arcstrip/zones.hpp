#pragma once

/*
 * Difference-bound zones over integer pairs (x, y), and finite unions of
 * them (regions).  A zone is the solution set of up to six bounds
 *
 *     x_lo <= x <= x_hi,  y_lo <= y <= y_hi,  d_lo <= y - x <= d_hi,
 *
 * kept in a canonical tightened form so that two zones are equal as sets
 * iff they are equal field-by-field.  Regions support exact union,
 * intersection, complement, difference, inclusion and equality; nothing
 * here is approximate.
 *
 * A small fixed-size difference-bound matrix over the five variables
 * {0, x1, y1, x2, y2} drives relation images: given a region binding one
 * (x, y) pair and a conjunction of difference constraints relating it to
 * the other pair, the projection onto the other pair is again a region,
 * exactly (integer difference constraints project without loss).
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arcstrip {

using i64 = std::int64_t;

// Sentinel for "no bound".  Large enough to dominate every honest index,
// small enough that saturating sums never overflow.
constexpr i64 kInf = i64{1} << 60;

inline i64 sat_add(i64 a, i64 b) {
  if (a >= kInf || b >= kInf) return kInf;
  if (a <= -kInf || b <= -kInf) return -kInf;
  i64 s = a + b;
  if (s >= kInf) return kInf;
  if (s <= -kInf) return -kInf;
  return s;
}

inline i64 sat_neg(i64 a) {
  if (a >= kInf) return -kInf;
  if (a <= -kInf) return kInf;
  return -a;
}

// ---------------------------------------------------------------------------
// Zone

struct Zone {
  i64 x_lo = -kInf, x_hi = kInf;
  i64 y_lo = -kInf, y_hi = kInf;
  i64 d_lo = -kInf, d_hi = kInf;  // d = y - x

  // Tightens the six bounds against each other (shortest paths on the
  // 3-node constraint graph).  Returns nullopt when the constraints are
  // unsatisfiable.  Every Zone stored in a Region has been through this.
  static std::optional<Zone> make(i64 x_lo, i64 x_hi, i64 y_lo, i64 y_hi,
                                  i64 d_lo = -kInf, i64 d_hi = kInf);
  static Zone full() { return Zone{}; }
  static std::optional<Zone> point(i64 x, i64 y) {
    return make(x, x, y, y);
  }

  bool operator==(const Zone&) const = default;

  bool contains(i64 x, i64 y) const {
    return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi &&
           y - x >= d_lo && y - x <= d_hi;
  }
  bool is_finite() const {
    return x_lo > -kInf && x_hi < kInf && y_lo > -kInf && y_hi < kInf;
  }
  // Set inclusion test for canonical zones.
  bool subset_of(const Zone& o) const {
    return x_lo >= o.x_lo && x_hi <= o.x_hi && y_lo >= o.y_lo &&
           y_hi <= o.y_hi && d_lo >= o.d_lo && d_hi <= o.d_hi;
  }
  std::optional<Zone> intersect(const Zone& o) const {
    return make(std::max(x_lo, o.x_lo), std::min(x_hi, o.x_hi),
                std::max(y_lo, o.y_lo), std::min(y_hi, o.y_hi),
                std::max(d_lo, o.d_lo), std::min(d_hi, o.d_hi));
  }
  Zone translate(i64 dx, i64 dy) const;
  // (x, y) |-> (-y, -x).  Maps zones to zones; d = y - x is preserved.
  Zone low_mirror() const;
  // (x, y) |-> (-x, -y).  Maps zones to zones; d = y - x is negated.
  Zone negate_xy() const;

  std::string str() const;
};

// ---------------------------------------------------------------------------
// Region: finite union of canonical zones.

class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Zone> zs);
  static Region empty() { return Region(); }
  static Region full() { return Region({Zone::full()}); }
  static Region of(std::optional<Zone> z) {
    Region r;
    if (z) r.zones_.push_back(*z);
    return r;
  }

  const std::vector<Zone>& zones() const { return zones_; }
  bool is_empty() const { return zones_.empty(); }
  bool is_finite() const;
  bool contains(i64 x, i64 y) const;
  std::size_t size() const { return zones_.size(); }

  Region union_with(const Region& o) const;
  Region intersect(const Region& o) const;
  Region complement() const;
  Region difference(const Region& o) const;
  bool subset_of(const Region& o) const;
  bool equals(const Region& o) const {
    return subset_of(o) && o.subset_of(*this);
  }

  Region translate(i64 dx, i64 dy) const;
  Region low_mirror() const;
  Region negate_xy() const;
  // (x, y) |-> (x, -y).  Negating one coordinate turns a bound on y - x
  // into a bound on y + x, which zones cannot express, so this splits any
  // zone with a live diagonal bound into rows or columns first.  Throws
  // InputError when the zone is infinite in both coordinates with a live
  // diagonal bound (not representable), or when a split would exceed an
  // internal width cap.
  Region mirror_y() const;

  // Drops zones subsumed by other zones of the same region.
  Region compact() const;

  // All integer points, sorted lexicographically.  Throws InputError if the
  // region is unbounded or has more than cap points.
  std::vector<std::pair<i64, i64>> enumerate(std::size_t cap = 1000000) const;

  std::string str() const;

 private:
  std::vector<Zone> zones_;
};

// ---------------------------------------------------------------------------
// Integer interval sets (for one-dimensional slices and point sets).

class IntervalSet {
 public:
  IntervalSet() = default;
  // [lo, hi], inclusive; lo may be -kInf and hi may be kInf.
  static IntervalSet interval(i64 lo, i64 hi);
  static IntervalSet empty() { return IntervalSet(); }
  static IntervalSet all() { return interval(-kInf, kInf); }

  void add(i64 lo, i64 hi);
  const std::vector<std::pair<i64, i64>>& intervals() const { return ivs_; }

  bool is_empty() const { return ivs_.empty(); }
  bool contains(i64 v) const;
  bool subset_of(const IntervalSet& o) const;
  IntervalSet union_with(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet complement() const;
  IntervalSet negate() const;  // v |-> -v
  IntervalSet translate(i64 dv) const;

  bool bounded_above() const;
  bool bounded_below() const;
  // Extremes; throw InputError when empty or unbounded on that side.
  i64 max() const;
  i64 min() const;

  bool operator==(const IntervalSet&) const = default;
  std::string str() const;

 private:
  std::vector<std::pair<i64, i64>> ivs_;  // disjoint, sorted, non-adjacent
  void normalize();
};

// Slice of a region at a fixed coordinate, as a set of the other coordinate.
IntervalSet slice_at_x(const Region& r, i64 x);
IntervalSet slice_at_y(const Region& r, i64 y);
IntervalSet project_x(const Region& r);
IntervalSet project_y(const Region& r);

// ---------------------------------------------------------------------------
// Difference constraints and relation images.

// v_a - v_b <= c over the slot set {0: zero, 1: x1, 2: y1, 3: x2, 4: y2}.
struct DiffCon {
  int a = 0, b = 0;
  i64 c = 0;
};

constexpr int kSlotZero = 0, kSlotX1 = 1, kSlotY1 = 2, kSlotX2 = 3,
              kSlotY2 = 4;

inline DiffCon lt(int a, int b) { return DiffCon{a, b, -1}; }  // v_a < v_b
inline DiffCon le(int a, int b) { return DiffCon{a, b, 0}; }   // v_a <= v_b

// Five-variable difference-bound matrix.  m[i][j] bounds v_i - v_j from
// above.  close() runs Floyd-Warshall and reports satisfiability.
class Dbm {
 public:
  Dbm();
  void constrain(const DiffCon& c);
  void constrain_zone(int slot_x, int slot_y, const Zone& z);
  bool close();  // false iff unsatisfiable
  Zone project(int slot_x, int slot_y) const;  // requires closed, satisfiable

 private:
  std::array<std::array<i64, 5>, 5> m_;
  bool closed_ = false;
};

// One case of a binary relation between (x1, y1) and (x2, y2): a conjunction
// of difference constraints, plus optional validity zones clipping each side.
struct CrossRelationCase {
  std::vector<DiffCon> cons;
  Zone valid1 = Zone::full();
  Zone valid2 = Zone::full();
};

enum class RelSide { First, Second };

// Image of `r` under the union of the given relation cases.  With
// side == First, r binds (x1, y1) and the result ranges over (x2, y2);
// with side == Second the roles swap.  Exact.
Region relation_image(const Region& r,
                      const std::vector<CrossRelationCase>& cases,
                      RelSide side);

}  // namespace arcstrip
