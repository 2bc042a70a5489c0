#include "arcstrip/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arcstrip/errors.hpp"

namespace arcstrip {

std::vector<ArcOrEdge> window_arcs(const Window& w) {
  std::vector<ArcOrEdge> out;
  for (i64 a = w.lo; a + 2 <= w.hi; ++a)
    for (i64 b = a + 2; b <= w.hi; ++b)
      out.push_back(ArcOrEdge::upper_arc(a, b));
  for (i64 a = w.lo; a + 2 <= w.hi; ++a)
    for (i64 b = a + 2; b <= w.hi; ++b)
      out.push_back(ArcOrEdge::lower_arc(a, b));
  for (i64 a = w.lo; a <= w.hi; ++a)
    for (i64 b = w.lo; b <= w.hi; ++b)
      out.push_back(ArcOrEdge::conn_arc(a, b));
  return out;
}

// ---------------------------------------------------------------------------
// Geometric crossing oracle.

namespace {

using i128 = __int128;

struct Rat {
  i64 n = 0, d = 1;
};

Rat rat(i64 n, i64 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i64 g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rat{n, d};
}

struct RPoint {
  Rat x, y;
};

// Depth of the bump drawn for a boundary arc of width w starting at index
// a: just below the mid-line, shrinking with width, plus a per-arc offset
// so no two horizontal runs share a height.
Rat bump_depth(i64 a, i64 w) {
  // 1/2 - 1/(w+2) + (a+40)/2^24, assembled over the common denominator
  // 2^25 * (w+2).
  i64 den = (i64(w) + 2) << 25;
  i64 num = den / 2 - (den / (w + 2)) + (a + 40) * ((w + 2) << 1);
  if (num <= 0 || num * 2 >= den)
    throw InternalInvariantError("bump depth left the open strip half");
  return rat(num, den);
}

std::vector<RPoint> curve_of(const ArcOrEdge& u) {
  switch (u.kind()) {
    case ArcKind::ConnArc:
      // l_a at (a, 1), r_b at (-b, 0).
      return {{rat(u.a(), 1), rat(1, 1)}, {rat(-u.b(), 1), rat(0, 1)}};
    case ArcKind::UpperArc: {
      Rat d = bump_depth(u.a(), u.b() - u.a());
      Rat top = rat(d.d - d.n, d.d);  // 1 - depth
      return {{rat(u.a(), 1), rat(1, 1)},
              {rat(2 * u.a() + 1, 2), top},
              {rat(2 * u.b() - 1, 2), top},
              {rat(u.b(), 1), rat(1, 1)}};
    }
    case ArcKind::LowerArc: {
      Rat d = bump_depth(u.a(), u.b() - u.a());
      // r_a at (-a, 0), r_b at (-b, 0); the bump rises above the lower
      // boundary, spanning screen interval [-b, -a].
      return {{rat(-u.b(), 1), rat(0, 1)},
              {rat(-2 * u.b() + 1, 2), d},
              {rat(-2 * u.a() - 1, 2), d},
              {rat(-u.a(), 1), rat(0, 1)}};
    }
    default:
      throw InputError("no curve representative for edges");
  }
}

i64 lcm_checked(i64 a, i64 b) {
  i128 l = (i128)a / std::gcd(a, b) * b;
  if (l > (i128)1 << 56)
    throw InternalInvariantError("coordinate denominators overflow");
  return (i64)l;
}

int sign_of(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// Counts proper transversal crossings between two polylines; throws on any
// degenerate contact (collinear overlap, vertex on segment).
int count_crossings(const std::vector<RPoint>& p,
                    const std::vector<RPoint>& q) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    for (std::size_t j = 0; j + 1 < q.size(); ++j) {
      const RPoint seg[4] = {p[i], p[i + 1], q[j], q[j + 1]};
      i64 L = 1;
      for (const RPoint& pt : seg) {
        L = lcm_checked(L, pt.x.d);
        L = lcm_checked(L, pt.y.d);
      }
      i64 X[4], Y[4];
      for (int k = 0; k < 4; ++k) {
        X[k] = seg[k].x.n * (L / seg[k].x.d);
        Y[k] = seg[k].y.n * (L / seg[k].y.d);
      }
      auto orient = [&](int a, int b, int c) {
        return sign_of((i128)(X[b] - X[a]) * (Y[c] - Y[a]) -
                       (i128)(Y[b] - Y[a]) * (X[c] - X[a]));
      };
      int o1 = orient(0, 1, 2), o2 = orient(0, 1, 3);
      int o3 = orient(2, 3, 0), o4 = orient(2, 3, 1);
      if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        if (o1 != o2 && o3 != o4) ++count;
        continue;
      }
      // A zero orientation is only acceptable when the collinear point
      // falls outside the other segment.
      auto on_segment = [&](int a, int b, int c) {
        return std::min(X[a], X[b]) <= X[c] && X[c] <= std::max(X[a], X[b]) &&
               std::min(Y[a], Y[b]) <= Y[c] && Y[c] <= std::max(Y[a], Y[b]);
      };
      if ((o1 == 0 && on_segment(0, 1, 2)) ||
          (o2 == 0 && on_segment(0, 1, 3)) ||
          (o3 == 0 && on_segment(2, 3, 0)) ||
          (o4 == 0 && on_segment(2, 3, 1)))
        throw InternalInvariantError(
            "degenerate contact between curve representatives");
    }
  }
  return count;
}

}  // namespace

bool geom_crossing_oracle(const ArcOrEdge& u, const ArcOrEdge& v) {
  if (u.is_edge() || v.is_edge()) return false;
  auto [p1, p2] = u.endpoints();
  if (v.has_endpoint(p1) || v.has_endpoint(p2)) return false;
  int n = count_crossings(curve_of(u), curve_of(v));
  return n % 2 == 1;
}

// ---------------------------------------------------------------------------
// Region-level noncrossing membership, built from per-arc intervals rather
// than the relation tables.

namespace {

bool region_meets(const Region& r, const std::vector<Zone>& zs) {
  for (const Zone& z : zs)
    if (!r.intersect(Region({z})).is_empty()) return true;
  return false;
}

std::vector<Zone> box(i64 xl, i64 xh, i64 yl, i64 yh) {
  auto z = Zone::make(xl, xh, yl, yh);
  if (!z) return {};
  return {*z};
}

void append(std::vector<Zone>& dst, std::vector<Zone> src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

bool member_nc_oracle(const ArcSet& t, const ArcOrEdge& v) {
  if (!v.is_arc()) throw InputError("member_nc_oracle expects an arc");
  std::vector<Zone> up, lo, co;  // crossers of v, standard coordinates
  switch (v.kind()) {
    case ArcKind::UpperArc: {
      i64 i = v.a(), j = v.b();
      append(up, box(i + 1, j - 1, j + 1, kInf));
      append(up, box(-kInf, i - 1, i + 1, j - 1));
      append(co, box(i + 1, j - 1, -kInf, kInf));
      break;
    }
    case ArcKind::LowerArc: {
      i64 i = v.a(), j = v.b();
      append(lo, box(i + 1, j - 1, j + 1, kInf));
      append(lo, box(-kInf, i - 1, i + 1, j - 1));
      append(co, box(-kInf, kInf, i + 1, j - 1));
      break;
    }
    case ArcKind::ConnArc: {
      i64 p = v.a(), q = v.b();
      append(up, box(-kInf, p - 1, p + 1, kInf));
      append(lo, box(-kInf, q - 1, q + 1, kInf));
      append(co, box(p + 1, kInf, q + 1, kInf));
      append(co, box(-kInf, p - 1, -kInf, q - 1));
      break;
    }
    default:
      break;
  }
  if (region_meets(t.upper_region(), up)) return false;
  if (region_meets(t.lower_region(), lo)) return false;
  if (t.chirality() == ConnChir::Mir) {
    // The conn crosser zones above are plain boxes, so flipping the second
    // coordinate keeps them zones.
    std::vector<Zone> flipped;
    for (const Zone& z : co) {
      auto m = Zone::make(z.x_lo, z.x_hi, sat_neg(z.y_hi), sat_neg(z.y_lo));
      if (m) flipped.push_back(*m);
    }
    co = flipped;
  }
  if (region_meets(t.conn_region_stored(), co)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Plain-loop set predicates.

bool brute_noncrossing(const std::vector<ArcOrEdge>& arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (crosses(arcs[i], arcs[j])) return false;
  return true;
}

bool brute_is_ptolemy(const std::vector<ArcOrEdge>& arcs) {
  std::set<ArcOrEdge> have(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (!crosses(arcs[i], arcs[j])) continue;
      for (const ArcOrEdge& c : corners(arcs[i], arcs[j]))
        if (!have.count(c)) return false;
    }
  return true;
}

bool brute_tau_basis(const std::vector<ArcOrEdge>& sigma,
                     const std::vector<ArcOrEdge>& omega) {
  std::set<ArcOrEdge> in_omega(omega.begin(), omega.end());
  auto in_omega_bar = [&](const ArcOrEdge& m) {
    return m.is_edge() || in_omega.count(m) > 0;
  };
  for (const ArcOrEdge& u1 : omega) {
    bool served = false;
    for (const ArcOrEdge& u2 : sigma) {
      if (!crosses(tau_arc(u2), u1)) continue;
      if (crosses(u2, u1)) {
        auto [m1, m2] = middle_terms(u2, u1);
        if (!in_omega_bar(m1) || !in_omega_bar(m2)) continue;
      }
      served = true;
      break;
    }
    if (!served) return false;
  }
  return true;
}

}  // namespace arcstrip
