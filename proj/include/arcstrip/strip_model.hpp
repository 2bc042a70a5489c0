#pragma once

/*
 * Scalar model of the marked strip.  Marked points come in two rows:
 * l_i on the upper boundary and r_i on the lower boundary (r-indices grow
 * toward the left when drawn).  An arc joins two marked points and stays in
 * the interior; an edge joins neighbours along one boundary.  Three arc
 * families, each stored as a sorted/oriented integer pair:
 *
 *   upper (a, b): l_a -- l_b with a < b, b - a >= 2
 *   lower (a, b): r_a -- r_b with a < b, b - a >= 2
 *   conn  (a, b): l_a -- r_b, any integers
 *
 * Everything downstream (zone case tables, oracles) is validated against
 * the functions in this header, so they stay deliberately plain: direct
 * transcriptions of the index rules, one arc pair at a time.
 */

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcstrip/errors.hpp"
#include "arcstrip/zones.hpp"

namespace arcstrip {

enum class Boundary { Upper, Lower };

struct MarkedPoint {
  Boundary boundary = Boundary::Upper;
  i64 index = 0;
  auto operator<=>(const MarkedPoint&) const = default;
  std::string str() const {
    return (boundary == Boundary::Upper ? "l" : "r") + std::to_string(index);
  }
};

inline MarkedPoint upper_point(i64 i) { return {Boundary::Upper, i}; }
inline MarkedPoint lower_point(i64 i) { return {Boundary::Lower, i}; }

enum class ArcKind { UpperArc, LowerArc, ConnArc, UpperEdge, LowerEdge };

class ArcOrEdge {
 public:
  static ArcOrEdge upper_arc(i64 a, i64 b);
  static ArcOrEdge lower_arc(i64 a, i64 b);
  static ArcOrEdge conn_arc(i64 a, i64 b);
  static ArcOrEdge upper_edge(i64 i);  // l_i -- l_{i+1}
  static ArcOrEdge lower_edge(i64 i);  // r_i -- r_{i+1}
  // Joins two marked points, sorting as needed.  Neighbouring points give
  // an edge; equal points are an error.
  static ArcOrEdge join(MarkedPoint p, MarkedPoint q);

  ArcKind kind() const { return kind_; }
  i64 a() const { return a_; }
  i64 b() const { return b_; }
  bool is_arc() const {
    return kind_ == ArcKind::UpperArc || kind_ == ArcKind::LowerArc ||
           kind_ == ArcKind::ConnArc;
  }
  bool is_edge() const { return !is_arc(); }

  std::pair<MarkedPoint, MarkedPoint> endpoints() const;
  bool has_endpoint(MarkedPoint p) const;
  MarkedPoint other_endpoint(MarkedPoint p) const;

  auto operator<=>(const ArcOrEdge&) const = default;

  std::string str() const;

 private:
  ArcOrEdge(ArcKind k, i64 a, i64 b) : kind_(k), a_(a), b_(b) {}
  ArcKind kind_;
  i64 a_, b_;
};

// Shift every index by k; models the auto-equivalence that slides the whole
// diagram one step (k = 1 is the shift tau itself).
ArcOrEdge tau_arc(const ArcOrEdge& u, i64 k = 1);

// Left-right reflection of the strip: l_i <-> l_{-i}, r_i <-> r_{-i}.  An
// involution that preserves crossing and swaps the two horizontal escape
// directions on each boundary.
ArcOrEdge mirror_arc(const ArcOrEdge& u);

// Half turn of the strip: l_i <-> r_{-i}.  An involution that preserves
// crossing and swaps the two boundaries.
ArcOrEdge half_turn_arc(const ArcOrEdge& u);

// Whether two arcs cross in the interior.  Edges cross nothing; sharing an
// endpoint never counts as crossing.
bool crosses(const ArcOrEdge& u, const ArcOrEdge& v);

// Position of an arc or edge in the fan of curves at one of its endpoints.
// Keys order the fan from the boundary edge on the lesser-index side of p
// around to the boundary edge on the greater-index side; two distinct
// curves at the same point always get distinct keys.
struct FanKey {
  int cls = 0;       // 0, 1, 2: sweep position of the far endpoint's row
  i64 tiebreak = 0;  // within a class: farther endpoints sort smaller
  auto operator<=>(const FanKey&) const = default;
};

FanKey fan_key(MarkedPoint p, const ArcOrEdge& u);

// Three-way comparison of u and v in the fan at p (both must end at p).
std::strong_ordering fan_compare(MarkedPoint p, const ArcOrEdge& u,
                                 const ArcOrEdge& v);

// The four sides of the quadrilateral spanned by a crossing pair: every
// recombination of one endpoint of u with one endpoint of v.  Order is
// (u.first,v.first), (u.first,v.second), (u.second,v.first),
// (u.second,v.second).  Throws unless the arcs cross.
std::vector<ArcOrEdge> corners_all(const ArcOrEdge& u, const ArcOrEdge& v);

// Corner sides that are arcs (edges filtered out).
std::vector<ArcOrEdge> corners(const ArcOrEdge& u, const ArcOrEdge& v);

// The two opposite quadrilateral sides m with  from <_p m  at the endpoint
// shared with `from` and  m <_q to  at the endpoint shared with `to`.
// Throws unless the arcs cross.
std::pair<ArcOrEdge, ArcOrEdge> middle_terms(const ArcOrEdge& from,
                                             const ArcOrEdge& to);

// Literal syntax: U(a,b), L(a,b), C(a,b).  Whitespace around numbers is
// fine.  Edges have no literal form.
ArcOrEdge parse_arc(const std::string& text);
std::optional<ArcOrEdge> try_parse_arc(const std::string& text);

// An index range [lo, hi] used to cut finite pieces out of the strip.
// Needs hi - lo >= 2 so that at least one arc fits.
struct Window {
  i64 lo = 0, hi = 0;
  Window(i64 lo_, i64 hi_) : lo(lo_), hi(hi_) {
    if (hi - lo < 2)
      throw InputError("window [" + std::to_string(lo) + "," +
                       std::to_string(hi) + "] is too narrow for arcs");
  }
};

}  // namespace arcstrip
