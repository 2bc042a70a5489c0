#include "arcstrip/zones.hpp"

#include <algorithm>
#include <sstream>

#include "arcstrip/errors.hpp"

namespace arcstrip {

namespace {

std::string bound_str(i64 v) {
  if (v >= kInf) return "+inf";
  if (v <= -kInf) return "-inf";
  return std::to_string(v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Zone

std::optional<Zone> Zone::make(i64 x_lo, i64 x_hi, i64 y_lo, i64 y_hi,
                               i64 d_lo, i64 d_hi) {
  // Nodes: 0 = zero, 1 = x, 2 = y; m[i][j] is an upper bound on v_i - v_j.
  i64 m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 0 : kInf;
  m[1][0] = x_hi;
  m[0][1] = sat_neg(x_lo);
  m[2][0] = y_hi;
  m[0][2] = sat_neg(y_lo);
  m[2][1] = d_hi;
  m[1][2] = sat_neg(d_lo);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m[i][j] = std::min(m[i][j], sat_add(m[i][k], m[k][j]));
  for (int i = 0; i < 3; ++i)
    if (m[i][i] < 0) return std::nullopt;
  Zone z;
  z.x_lo = sat_neg(m[0][1]);
  z.x_hi = m[1][0];
  z.y_lo = sat_neg(m[0][2]);
  z.y_hi = m[2][0];
  z.d_lo = sat_neg(m[1][2]);
  z.d_hi = m[2][1];
  return z;
}

Zone Zone::translate(i64 dx, i64 dy) const {
  auto z = make(sat_add(x_lo, dx), sat_add(x_hi, dx), sat_add(y_lo, dy),
                sat_add(y_hi, dy), sat_add(d_lo, dy - dx),
                sat_add(d_hi, dy - dx));
  return *z;  // translation preserves satisfiability
}

Zone Zone::low_mirror() const {
  // With (x', y') = (-y, -x): y' - x' = -x + y = d, so the diagonal
  // bounds carry over unchanged.
  auto z = make(sat_neg(y_hi), sat_neg(y_lo), sat_neg(x_hi), sat_neg(x_lo),
                d_lo, d_hi);
  return *z;
}

Zone Zone::negate_xy() const {
  // With (x', y') = (-x, -y): y' - x' = -(y - x) = -d.
  auto z = make(sat_neg(x_hi), sat_neg(x_lo), sat_neg(y_hi), sat_neg(y_lo),
                sat_neg(d_hi), sat_neg(d_lo));
  return *z;
}

std::string Zone::str() const {
  std::ostringstream os;
  os << "{x:[" << bound_str(x_lo) << "," << bound_str(x_hi) << "] y:["
     << bound_str(y_lo) << "," << bound_str(y_hi) << "] d:["
     << bound_str(d_lo) << "," << bound_str(d_hi) << "]}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Region

Region::Region(std::vector<Zone> zs) {
  for (const Zone& z : zs) {
    auto c = Zone::make(z.x_lo, z.x_hi, z.y_lo, z.y_hi, z.d_lo, z.d_hi);
    if (c) zones_.push_back(*c);
  }
  *this = compact();
}

bool Region::is_finite() const {
  for (const Zone& z : zones_)
    if (!z.is_finite()) return false;
  return true;
}

bool Region::contains(i64 x, i64 y) const {
  for (const Zone& z : zones_)
    if (z.contains(x, y)) return true;
  return false;
}

Region Region::union_with(const Region& o) const {
  Region r;
  r.zones_ = zones_;
  r.zones_.insert(r.zones_.end(), o.zones_.begin(), o.zones_.end());
  return r.compact();
}

Region Region::intersect(const Region& o) const {
  Region r;
  for (const Zone& a : zones_)
    for (const Zone& b : o.zones_) {
      auto z = a.intersect(b);
      if (z) r.zones_.push_back(*z);
    }
  return r.compact();
}

namespace {

// c minus z, as disjoint canonical pieces.  Peels one facet of z at a time:
// the k-th piece satisfies the first k-1 bounds of z and violates the k-th.
std::vector<Zone> zone_difference(const Zone& c, const Zone& z) {
  std::vector<Zone> out;
  Zone rest = c;
  bool rest_alive = true;
  struct Facet {
    bool live;
    Zone violate;  // single-constraint zone violating the bound
    Zone satisfy;  // single-constraint zone satisfying the bound
  };
  auto zx = [](i64 lo, i64 hi) {
    Zone z = Zone::full();
    z.x_lo = lo;
    z.x_hi = hi;
    return z;
  };
  auto zy = [](i64 lo, i64 hi) {
    Zone z = Zone::full();
    z.y_lo = lo;
    z.y_hi = hi;
    return z;
  };
  auto zd = [](i64 lo, i64 hi) {
    Zone z = Zone::full();
    z.d_lo = lo;
    z.d_hi = hi;
    return z;
  };
  const Facet facets[6] = {
      {z.x_lo > -kInf, zx(-kInf, z.x_lo - 1), zx(z.x_lo, kInf)},
      {z.x_hi < kInf, zx(z.x_hi + 1, kInf), zx(-kInf, z.x_hi)},
      {z.y_lo > -kInf, zy(-kInf, z.y_lo - 1), zy(z.y_lo, kInf)},
      {z.y_hi < kInf, zy(z.y_hi + 1, kInf), zy(-kInf, z.y_hi)},
      {z.d_lo > -kInf, zd(-kInf, z.d_lo - 1), zd(z.d_lo, kInf)},
      {z.d_hi < kInf, zd(z.d_hi + 1, kInf), zd(-kInf, z.d_hi)},
  };
  for (const Facet& f : facets) {
    if (!f.live || !rest_alive) continue;
    auto piece = rest.intersect(f.violate);
    if (piece) out.push_back(*piece);
    auto next = rest.intersect(f.satisfy);
    if (!next) {
      rest_alive = false;
    } else {
      rest = *next;
    }
  }
  return out;
}

}  // namespace

Region Region::complement() const {
  std::vector<Zone> cur = {Zone::full()};
  for (const Zone& z : zones_) {
    std::vector<Zone> next;
    for (const Zone& c : cur) {
      auto pieces = zone_difference(c, z);
      next.insert(next.end(), pieces.begin(), pieces.end());
    }
    cur = std::move(next);
    if (cur.empty()) break;
  }
  Region r;
  r.zones_ = std::move(cur);
  return r.compact();
}

Region Region::difference(const Region& o) const {
  Region r;
  for (const Zone& a : zones_) {
    std::vector<Zone> pieces = {a};
    for (const Zone& b : o.zones_) {
      std::vector<Zone> next;
      for (const Zone& p : pieces) {
        auto d = zone_difference(p, b);
        next.insert(next.end(), d.begin(), d.end());
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    r.zones_.insert(r.zones_.end(), pieces.begin(), pieces.end());
  }
  return r.compact();
}

bool Region::subset_of(const Region& o) const {
  for (const Zone& a : zones_) {
    std::vector<Zone> pieces = {a};
    for (const Zone& b : o.zones_) {
      std::vector<Zone> next;
      for (const Zone& p : pieces) {
        auto d = zone_difference(p, b);
        next.insert(next.end(), d.begin(), d.end());
      }
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    if (!pieces.empty()) return false;
  }
  return true;
}

Region Region::translate(i64 dx, i64 dy) const {
  Region r;
  for (const Zone& z : zones_) r.zones_.push_back(z.translate(dx, dy));
  return r;
}

Region Region::negate_xy() const {
  Region r;
  for (const Zone& z : zones_) r.zones_.push_back(z.negate_xy());
  return r;
}

Region Region::low_mirror() const {
  Region r;
  for (const Zone& z : zones_) r.zones_.push_back(z.low_mirror());
  return r;
}

Region Region::mirror_y() const {
  constexpr i64 kSplitCap = 4096;
  Region r;
  for (const Zone& z : zones_) {
    auto relaxed = Zone::make(z.x_lo, z.x_hi, z.y_lo, z.y_hi);
    if (relaxed && *relaxed == z) {
      // Diagonal bounds are implied by the box; safe to flip directly.
      auto m = Zone::make(z.x_lo, z.x_hi, sat_neg(z.y_hi), sat_neg(z.y_lo));
      if (m) r.zones_.push_back(*m);
      continue;
    }
    if (z.x_lo > -kInf && z.x_hi < kInf && z.x_hi - z.x_lo <= kSplitCap) {
      for (i64 x = z.x_lo; x <= z.x_hi; ++x) {
        i64 lo = std::max(z.y_lo, sat_add(x, z.d_lo));
        i64 hi = std::min(z.y_hi, sat_add(x, z.d_hi));
        if (lo > hi) continue;
        auto m = Zone::make(x, x, sat_neg(hi), sat_neg(lo));
        if (m) r.zones_.push_back(*m);
      }
      continue;
    }
    if (z.y_lo > -kInf && z.y_hi < kInf && z.y_hi - z.y_lo <= kSplitCap) {
      for (i64 y = z.y_lo; y <= z.y_hi; ++y) {
        i64 lo = std::max(z.x_lo, sat_add(y, sat_neg(z.d_hi)));
        i64 hi = std::min(z.x_hi, sat_add(y, sat_neg(z.d_lo)));
        if (lo > hi) continue;
        auto m = Zone::make(lo, hi, sat_neg(y), sat_neg(y));
        if (m) r.zones_.push_back(*m);
      }
      continue;
    }
    throw InputError(
        "region not representable with one coordinate negated: zone " +
        z.str() + " has a live diagonal bound and infinite extent");
  }
  return r.compact();
}

Region Region::compact() const {
  const std::vector<Zone>& zs = zones_;
  std::vector<bool> dead(zs.size(), false);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (i == j || dead[j]) continue;
      // Drop zs[i] when subsumed; of equal duplicates keep the first.
      if (zs[i].subset_of(zs[j]) && (zs[i] != zs[j] || j < i)) {
        dead[i] = true;
        break;
      }
    }
  }
  Region r;
  for (std::size_t i = 0; i < zs.size(); ++i)
    if (!dead[i]) r.zones_.push_back(zs[i]);
  return r;
}

std::vector<std::pair<i64, i64>> Region::enumerate(std::size_t cap) const {
  if (!is_finite())
    throw InputError("cannot enumerate an unbounded region: " + str());
  std::vector<std::pair<i64, i64>> pts;
  for (const Zone& z : zones_) {
    for (i64 x = z.x_lo; x <= z.x_hi; ++x) {
      i64 lo = std::max(z.y_lo, sat_add(x, z.d_lo));
      i64 hi = std::min(z.y_hi, sat_add(x, z.d_hi));
      for (i64 y = lo; y <= hi; ++y) {
        pts.emplace_back(x, y);
        if (pts.size() > 4 * cap + 8)
          throw InputError("region enumeration exceeds cap");
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() > cap) throw InputError("region enumeration exceeds cap");
  return pts;
}

std::string Region::str() const {
  if (zones_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < zones_.size(); ++i) {
    if (i) s += " u ";
    s += zones_[i].str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// IntervalSet

IntervalSet IntervalSet::interval(i64 lo, i64 hi) {
  IntervalSet s;
  s.add(lo, hi);
  return s;
}

void IntervalSet::add(i64 lo, i64 hi) {
  if (lo > hi) return;
  ivs_.emplace_back(lo, hi);
  normalize();
}

void IntervalSet::normalize() {
  std::sort(ivs_.begin(), ivs_.end());
  std::vector<std::pair<i64, i64>> out;
  for (auto& iv : ivs_) {
    if (!out.empty() && iv.first <= sat_add(out.back().second, 1)) {
      out.back().second = std::max(out.back().second, iv.second);
    } else {
      out.push_back(iv);
    }
  }
  ivs_ = std::move(out);
}

bool IntervalSet::contains(i64 v) const {
  for (auto& iv : ivs_)
    if (v >= iv.first && v <= iv.second) return true;
  return false;
}

IntervalSet IntervalSet::union_with(const IntervalSet& o) const {
  IntervalSet s;
  s.ivs_ = ivs_;
  s.ivs_.insert(s.ivs_.end(), o.ivs_.begin(), o.ivs_.end());
  s.normalize();
  return s;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  IntervalSet s;
  for (auto& a : ivs_)
    for (auto& b : o.ivs_) {
      i64 lo = std::max(a.first, b.first);
      i64 hi = std::min(a.second, b.second);
      if (lo <= hi) s.ivs_.emplace_back(lo, hi);
    }
  s.normalize();
  return s;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet s;
  i64 cursor = -kInf;
  for (auto& iv : ivs_) {
    if (iv.first > cursor) s.ivs_.emplace_back(cursor, iv.first - 1);
    cursor = sat_add(iv.second, 1);
    if (cursor >= kInf) return s;  // reached the top sentinel
  }
  s.ivs_.emplace_back(cursor, kInf);
  s.normalize();
  return s;
}

IntervalSet IntervalSet::negate() const {
  IntervalSet s;
  for (auto& iv : ivs_)
    s.ivs_.emplace_back(sat_neg(iv.second), sat_neg(iv.first));
  s.normalize();
  return s;
}

IntervalSet IntervalSet::translate(i64 dv) const {
  IntervalSet s;
  for (auto& iv : ivs_)
    s.ivs_.emplace_back(sat_add(iv.first, dv), sat_add(iv.second, dv));
  s.normalize();
  return s;
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
  return intersect(o.complement()).is_empty();
}

bool IntervalSet::bounded_above() const {
  return ivs_.empty() || ivs_.back().second < kInf;
}

bool IntervalSet::bounded_below() const {
  return ivs_.empty() || ivs_.front().first > -kInf;
}

i64 IntervalSet::max() const {
  if (ivs_.empty()) throw InputError("max of empty interval set");
  if (!bounded_above()) throw InputError("max of set unbounded above");
  return ivs_.back().second;
}

i64 IntervalSet::min() const {
  if (ivs_.empty()) throw InputError("min of empty interval set");
  if (!bounded_below()) throw InputError("min of set unbounded below");
  return ivs_.front().first;
}

std::string IntervalSet::str() const {
  if (ivs_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < ivs_.size(); ++i) {
    if (i) s += " u ";
    s += "[" + bound_str(ivs_[i].first) + "," + bound_str(ivs_[i].second) +
         "]";
  }
  return s;
}

IntervalSet slice_at_x(const Region& r, i64 x) {
  IntervalSet s;
  for (const Zone& z : r.zones()) {
    if (x < z.x_lo || x > z.x_hi) continue;
    i64 lo = std::max(z.y_lo, sat_add(x, z.d_lo));
    i64 hi = std::min(z.y_hi, sat_add(x, z.d_hi));
    if (lo <= hi) s = s.union_with(IntervalSet::interval(lo, hi));
  }
  return s;
}

IntervalSet slice_at_y(const Region& r, i64 y) {
  IntervalSet s;
  for (const Zone& z : r.zones()) {
    if (y < z.y_lo || y > z.y_hi) continue;
    i64 lo = std::max(z.x_lo, sat_add(y, sat_neg(z.d_hi)));
    i64 hi = std::min(z.x_hi, sat_add(y, sat_neg(z.d_lo)));
    if (lo <= hi) s = s.union_with(IntervalSet::interval(lo, hi));
  }
  return s;
}

IntervalSet project_x(const Region& r) {
  IntervalSet s;
  for (const Zone& z : r.zones())
    s = s.union_with(IntervalSet::interval(z.x_lo, z.x_hi));
  return s;
}

IntervalSet project_y(const Region& r) {
  IntervalSet s;
  for (const Zone& z : r.zones())
    s = s.union_with(IntervalSet::interval(z.y_lo, z.y_hi));
  return s;
}

// ---------------------------------------------------------------------------
// Dbm

Dbm::Dbm() {
  for (auto& row : m_) row.fill(kInf);
  for (int i = 0; i < 5; ++i) m_[i][i] = 0;
}

void Dbm::constrain(const DiffCon& c) {
  m_[c.a][c.b] = std::min(m_[c.a][c.b], c.c);
  closed_ = false;
}

void Dbm::constrain_zone(int sx, int sy, const Zone& z) {
  constrain({sx, kSlotZero, z.x_hi});
  constrain({kSlotZero, sx, sat_neg(z.x_lo)});
  constrain({sy, kSlotZero, z.y_hi});
  constrain({kSlotZero, sy, sat_neg(z.y_lo)});
  constrain({sy, sx, z.d_hi});
  constrain({sx, sy, sat_neg(z.d_lo)});
}

bool Dbm::close() {
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        m_[i][j] = std::min(m_[i][j], sat_add(m_[i][k], m_[k][j]));
  closed_ = true;
  for (int i = 0; i < 5; ++i)
    if (m_[i][i] < 0) return false;
  return true;
}

Zone Dbm::project(int sx, int sy) const {
  auto z = Zone::make(sat_neg(m_[kSlotZero][sx]), m_[sx][kSlotZero],
                      sat_neg(m_[kSlotZero][sy]), m_[sy][kSlotZero],
                      sat_neg(m_[sx][sy]), m_[sy][sx]);
  if (!z)
    throw InternalInvariantError("projection of a satisfiable DBM is empty");
  return *z;
}

// ---------------------------------------------------------------------------
// Relation images

Region relation_image(const Region& r,
                      const std::vector<CrossRelationCase>& cases,
                      RelSide side) {
  std::vector<Zone> out;
  for (const CrossRelationCase& cs : cases) {
    for (const Zone& z : r.zones()) {
      Dbm d;
      if (side == RelSide::First) {
        d.constrain_zone(kSlotX1, kSlotY1, z);
        d.constrain_zone(kSlotX1, kSlotY1, cs.valid1);
        d.constrain_zone(kSlotX2, kSlotY2, cs.valid2);
      } else {
        d.constrain_zone(kSlotX2, kSlotY2, z);
        d.constrain_zone(kSlotX2, kSlotY2, cs.valid2);
        d.constrain_zone(kSlotX1, kSlotY1, cs.valid1);
      }
      for (const DiffCon& c : cs.cons) d.constrain(c);
      if (!d.close()) continue;
      out.push_back(side == RelSide::First ? d.project(kSlotX2, kSlotY2)
                                           : d.project(kSlotX1, kSlotY1));
    }
  }
  return Region(std::move(out));
}

}  // namespace arcstrip
