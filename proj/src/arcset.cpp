#include "arcstrip/arcset.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "arcstrip/errors.hpp"

namespace arcstrip {

namespace {

enum class SetKind { Up = 0, Lo = 1, Co = 2 };

// Transform applied to a stored region when lifting it into relation slots.
// Lower regions are always stored in standard coordinates; inside a
// mirrored-world case that involves the connecting family they are lifted
// through (x, y) |-> (-y, -x), which keeps zones zones and turns the
// crossing conditions back into pure difference constraints.
enum class Xf { Id, LowMirror };

struct EndpointSlot {
  int slot;
  Boundary boundary;
  int sign;  // marked-point index = sign * slot value
};

struct CornerSel {
  SetKind out = SetKind::Up;
  bool mirror_out = false;  // un-mirror the projected zone before storing
  int s1 = 0, s2 = 0;       // slots holding the stored pair, in order
};

struct CrossCase {
  SetKind k1, k2;
  Xf xf1 = Xf::Id, xf2 = Xf::Id;
  std::vector<DiffCon> cons;
  std::array<CornerSel, 4> corner{};
  std::array<int, 2> mid_from_1{};  // corner indices, middles of (u1 -> u2)
  std::array<int, 2> mid_from_2{};
};

Zone valid_zone(SetKind k) {
  if (k == SetKind::Co) return Zone::full();
  return *Zone::make(-kInf, kInf, -kInf, kInf, 2, kInf);
}

Region valid_region(SetKind k) { return Region({valid_zone(k)}); }

std::array<EndpointSlot, 2> endpoint_slots(SetKind k, Xf xf, ConnChir world,
                                           int side) {
  int sx = side == 1 ? kSlotX1 : kSlotX2;
  int sy = side == 1 ? kSlotY1 : kSlotY2;
  switch (k) {
    case SetKind::Up:
      return {{{sx, Boundary::Upper, +1}, {sy, Boundary::Upper, +1}}};
    case SetKind::Lo:
      if (xf == Xf::LowMirror)
        return {{{sy, Boundary::Lower, -1}, {sx, Boundary::Lower, -1}}};
      return {{{sx, Boundary::Lower, +1}, {sy, Boundary::Lower, +1}}};
    case SetKind::Co:
      return {{{sx, Boundary::Upper, +1},
               {sy, Boundary::Lower, world == ConnChir::Mir ? -1 : +1}}};
  }
  std::abort();
}

ArcOrEdge arc_from_slots(SetKind k, Xf xf, ConnChir world, i64 va, i64 vb) {
  switch (k) {
    case SetKind::Up:
      return ArcOrEdge::upper_arc(va, vb);
    case SetKind::Lo:
      return xf == Xf::LowMirror ? ArcOrEdge::lower_arc(-vb, -va)
                                 : ArcOrEdge::lower_arc(va, vb);
    case SetKind::Co:
      return ArcOrEdge::conn_arc(va, world == ConnChir::Mir ? -vb : vb);
  }
  std::abort();
}

// Derives the corner and middle-term slot selections of one case from a
// concrete solution of its constraints.  The constraints totally order the
// endpoint coordinates involved, so the selection is the same for every
// solution; we still derive it from three distinct solutions and require
// agreement.
void probe_case(CrossCase& c, ConnChir world) {
  auto e1 = endpoint_slots(c.k1, c.xf1, world, 1);
  auto e2 = endpoint_slots(c.k2, c.xf2, world, 2);
  Zone v1 = valid_zone(c.k1), v2 = valid_zone(c.k2);

  int solutions = 0;
  std::array<CornerSel, 4> corner{};
  std::array<int, 2> mid1{}, mid2{};

  i64 vals[5] = {0, 0, 0, 0, 0};
  for (i64 a = -8; a <= 8 && solutions < 3; ++a)
    for (i64 b = -8; b <= 8 && solutions < 3; ++b)
      for (i64 p = -8; p <= 8 && solutions < 3; ++p)
        for (i64 q = -8; q <= 8 && solutions < 3; ++q) {
          i64 abs4[4] = {a < 0 ? -a : a, b < 0 ? -b : b, p < 0 ? -p : p,
                         q < 0 ? -q : q};
          bool distinct = true;
          for (int i = 0; i < 4 && distinct; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (abs4[i] == abs4[j]) {
                distinct = false;
                break;
              }
          if (!distinct) continue;
          vals[kSlotX1] = a;
          vals[kSlotY1] = b;
          vals[kSlotX2] = p;
          vals[kSlotY2] = q;
          bool ok = v1.contains(a, b) && v2.contains(p, q);
          for (const DiffCon& dc : c.cons)
            ok = ok && vals[dc.a] - vals[dc.b] <= dc.c;
          if (!ok) continue;

          ArcOrEdge u1 = arc_from_slots(c.k1, c.xf1, world, a, b);
          ArcOrEdge u2 = arc_from_slots(c.k2, c.xf2, world, p, q);
          if (!crosses(u1, u2))
            throw InternalInvariantError(
                "case constraints admit a non-crossing pair: " + u1.str() +
                " vs " + u2.str());

          std::array<CornerSel, 4> cs{};
          std::array<ArcOrEdge, 4> joins = {
              ArcOrEdge::upper_edge(0), ArcOrEdge::upper_edge(0),
              ArcOrEdge::upper_edge(0), ArcOrEdge::upper_edge(0)};
          for (int i = 0; i < 4; ++i) {
            const EndpointSlot& f = e1[i / 2];
            const EndpointSlot& g = e2[i % 2];
            MarkedPoint pf{f.boundary, f.sign * vals[f.slot]};
            MarkedPoint pg{g.boundary, g.sign * vals[g.slot]};
            joins[i] = ArcOrEdge::join(pf, pg);
            CornerSel sel;
            if (f.boundary == g.boundary) {
              sel.out = f.boundary == Boundary::Upper ? SetKind::Up
                                                      : SetKind::Lo;
              if (f.sign != g.sign)
                throw InternalInvariantError(
                    "mixed slot signs on one boundary");
              sel.mirror_out = f.sign < 0;
              if (vals[f.slot] < vals[g.slot]) {
                sel.s1 = f.slot;
                sel.s2 = g.slot;
              } else {
                sel.s1 = g.slot;
                sel.s2 = f.slot;
              }
            } else {
              sel.out = SetKind::Co;
              const EndpointSlot& up =
                  f.boundary == Boundary::Upper ? f : g;
              const EndpointSlot& lo =
                  f.boundary == Boundary::Upper ? g : f;
              if (up.sign != +1)
                throw InternalInvariantError("upper slot with flipped sign");
              sel.mirror_out = false;
              sel.s1 = up.slot;
              sel.s2 = lo.slot;
            }
            cs[i] = sel;
          }

          auto find_join = [&](const ArcOrEdge& m) {
            for (int i = 0; i < 4; ++i)
              if (joins[i] == m) return i;
            throw InternalInvariantError(
                "middle term is not a recombination side");
          };
          auto [m1a, m1b] = middle_terms(u1, u2);
          auto [m2a, m2b] = middle_terms(u2, u1);
          std::array<int, 2> i1 = {find_join(m1a), find_join(m1b)};
          std::array<int, 2> i2 = {find_join(m2a), find_join(m2b)};
          std::sort(i1.begin(), i1.end());
          std::sort(i2.begin(), i2.end());

          if (solutions == 0) {
            corner = cs;
            mid1 = i1;
            mid2 = i2;
          } else {
            bool same = mid1 == i1 && mid2 == i2;
            for (int i = 0; i < 4; ++i)
              same = same && corner[i].out == cs[i].out &&
                     corner[i].mirror_out == cs[i].mirror_out &&
                     corner[i].s1 == cs[i].s1 && corner[i].s2 == cs[i].s2;
            if (!same)
              throw InternalInvariantError(
                  "corner selection varies within one crossing case");
          }
          ++solutions;
        }
  if (solutions == 0)
    throw InternalInvariantError("crossing case has no probe solution");
  c.corner = corner;
  c.mid_from_1 = mid1;
  c.mid_from_2 = mid2;
}

std::vector<CrossCase> build_table(ConnChir world) {
  using SK = SetKind;
  const int X1 = kSlotX1, Y1 = kSlotY1, X2 = kSlotX2, Y2 = kSlotY2;
  std::vector<CrossCase> t;
  auto add = [&](SK k1, SK k2, Xf xf1, Xf xf2, std::vector<DiffCon> cons) {
    CrossCase c;
    c.k1 = k1;
    c.k2 = k2;
    c.xf1 = xf1;
    c.xf2 = xf2;
    c.cons = std::move(cons);
    t.push_back(std::move(c));
  };
  bool mir = world == ConnChir::Mir;
  Xf lo_xf = mir ? Xf::LowMirror : Xf::Id;

  // Boundary-boundary: two arcs on one boundary cross iff they interleave.
  add(SK::Up, SK::Up, Xf::Id, Xf::Id, {lt(X1, X2), lt(X2, Y1), lt(Y1, Y2)});
  add(SK::Up, SK::Up, Xf::Id, Xf::Id, {lt(X2, X1), lt(X1, Y2), lt(Y2, Y1)});
  add(SK::Lo, SK::Lo, Xf::Id, Xf::Id, {lt(X1, X2), lt(X2, Y1), lt(Y1, Y2)});
  add(SK::Lo, SK::Lo, Xf::Id, Xf::Id, {lt(X2, X1), lt(X1, Y2), lt(Y2, Y1)});

  // Boundary-connecting: the connecting arc's endpoint on that boundary
  // falls strictly inside the other arc's span.  In the mirrored world the
  // lower family is lifted so the same shape of constraints applies.
  add(SK::Up, SK::Co, Xf::Id, Xf::Id, {lt(X1, X2), lt(X2, Y1)});
  add(SK::Co, SK::Up, Xf::Id, Xf::Id, {lt(X2, X1), lt(X1, Y2)});
  add(SK::Lo, SK::Co, lo_xf, Xf::Id, {lt(X1, Y2), lt(Y2, Y1)});
  add(SK::Co, SK::Lo, Xf::Id, lo_xf, {lt(X2, Y1), lt(Y1, Y2)});

  // Connecting-connecting: strict domination one way or the other; with
  // the second coordinate stored negated the lower comparison flips.
  if (!mir) {
    add(SK::Co, SK::Co, Xf::Id, Xf::Id, {lt(X2, X1), lt(Y2, Y1)});
    add(SK::Co, SK::Co, Xf::Id, Xf::Id, {lt(X1, X2), lt(Y1, Y2)});
  } else {
    add(SK::Co, SK::Co, Xf::Id, Xf::Id, {lt(X2, X1), lt(Y1, Y2)});
    add(SK::Co, SK::Co, Xf::Id, Xf::Id, {lt(X1, X2), lt(Y2, Y1)});
  }

  for (CrossCase& c : t) probe_case(c, world);
  return t;
}

const std::vector<CrossCase>& table(ConnChir world) {
  static const std::vector<CrossCase> std_table = build_table(ConnChir::Std);
  static const std::vector<CrossCase> mir_table = build_table(ConnChir::Mir);
  return world == ConnChir::Std ? std_table : mir_table;
}

Region apply_xf(const Region& r, Xf xf) {
  return xf == Xf::LowMirror ? r.low_mirror() : r;
}

// Image of a stored region of kind c.k1 through one crossing case, as a
// stored region of kind c.k2.
Region image_one(const Region& src, const CrossCase& c) {
  CrossRelationCase rc;
  rc.cons = c.cons;
  rc.valid1 = valid_zone(c.k1);
  rc.valid2 = valid_zone(c.k2);
  Region img = relation_image(apply_xf(src, c.xf1), {rc}, RelSide::First);
  return apply_xf(img, c.xf2);
}

}  // namespace

std::string to_string(BoundDirection dir) {
  switch (dir) {
    case BoundDirection::UpperLeft: return "upper-left";
    case BoundDirection::UpperRight: return "upper-right";
    case BoundDirection::LowerLeft: return "lower-left";
    case BoundDirection::LowerRight: return "lower-right";
  }
  std::abort();
}

// ---------------------------------------------------------------------------
// Construction

ArcSet ArcSet::of(std::initializer_list<ArcOrEdge> arcs) {
  ArcSet t;
  for (const ArcOrEdge& u : arcs) t.add_arc(u);
  return t;
}

ArcSet ArcSet::of(const std::vector<ArcOrEdge>& arcs) {
  ArcSet t;
  for (const ArcOrEdge& u : arcs) t.add_arc(u);
  return t;
}

void ArcSet::add_arc(const ArcOrEdge& u) {
  if (!u.is_arc())
    throw InputError("edges cannot be members of arc sets: " + u.str());
  switch (u.kind()) {
    case ArcKind::UpperArc:
      up_ = up_.union_with(Region::of(Zone::point(u.a(), u.b())));
      break;
    case ArcKind::LowerArc:
      lo_ = lo_.union_with(Region::of(Zone::point(u.a(), u.b())));
      break;
    default:
      co_ = co_.union_with(Region::of(Zone::point(
          u.a(), chir_ == ConnChir::Mir ? -u.b() : u.b())));
      break;
  }
}

void ArcSet::add_upper_zone(const Zone& z) {
  up_ = up_.union_with(Region({z}).intersect(valid_region(SetKind::Up)));
}

void ArcSet::add_lower_zone(const Zone& z) {
  lo_ = lo_.union_with(Region({z}).intersect(valid_region(SetKind::Lo)));
}

void ArcSet::add_conn_zone(const Zone& z) {
  Region r({z});
  if (chir_ == ConnChir::Mir) r = r.mirror_y();
  co_ = co_.union_with(r);
}

void ArcSet::add_conn_zone_stored(const Zone& z) {
  co_ = co_.union_with(Region({z}));
}

Region ArcSet::conn_region_std() const {
  return chir_ == ConnChir::Mir ? co_.mirror_y() : co_;
}

// ---------------------------------------------------------------------------
// Basic queries

bool ArcSet::member(const ArcOrEdge& u) const {
  if (!u.is_arc())
    throw InputError("membership is defined for arcs only: " + u.str());
  switch (u.kind()) {
    case ArcKind::UpperArc: return up_.contains(u.a(), u.b());
    case ArcKind::LowerArc: return lo_.contains(u.a(), u.b());
    default:
      return co_.contains(u.a(),
                          chir_ == ConnChir::Mir ? -u.b() : u.b());
  }
}

bool ArcSet::is_empty() const {
  return up_.is_empty() && lo_.is_empty() && co_.is_empty();
}

bool ArcSet::is_finite() const {
  return up_.is_finite() && lo_.is_finite() && co_.is_finite();
}

std::pair<ArcSet, ArcSet> ArcSet::aligned(const ArcSet& a, const ArcSet& b) {
  if (a.chir_ == b.chir_) return {a, b};
  try {
    return {a, b.coerce(a.chir_)};
  } catch (const InputError&) {
  }
  try {
    return {a.coerce(b.chir_), b};
  } catch (const InputError&) {
  }
  throw InputError(
      "cannot align the storage conventions of two arc sets; neither "
      "connecting region is representable the other way");
}

ArcSet ArcSet::union_with(const ArcSet& o) const {
  auto [a, b] = aligned(*this, o);
  ArcSet r(a.chir_);
  r.up_ = a.up_.union_with(b.up_);
  r.lo_ = a.lo_.union_with(b.lo_);
  r.co_ = a.co_.union_with(b.co_);
  return r;
}

ArcSet ArcSet::intersect(const ArcSet& o) const {
  auto [a, b] = aligned(*this, o);
  ArcSet r(a.chir_);
  r.up_ = a.up_.intersect(b.up_);
  r.lo_ = a.lo_.intersect(b.lo_);
  r.co_ = a.co_.intersect(b.co_);
  return r;
}

ArcSet ArcSet::difference(const ArcSet& o) const {
  auto [a, b] = aligned(*this, o);
  ArcSet r(a.chir_);
  r.up_ = a.up_.difference(b.up_);
  r.lo_ = a.lo_.difference(b.lo_);
  r.co_ = a.co_.difference(b.co_);
  return r;
}

bool ArcSet::subset_of(const ArcSet& o) const {
  auto [a, b] = aligned(*this, o);
  return a.up_.subset_of(b.up_) && a.lo_.subset_of(b.lo_) &&
         a.co_.subset_of(b.co_);
}

bool ArcSet::equals(const ArcSet& o) const {
  auto [a, b] = aligned(*this, o);
  return a.up_.equals(b.up_) && a.lo_.equals(b.lo_) && a.co_.equals(b.co_);
}

ArcSet ArcSet::tau(i64 k) const {
  ArcSet r(chir_);
  r.up_ = up_.translate(k, k);
  r.lo_ = lo_.translate(k, k);
  r.co_ = chir_ == ConnChir::Mir ? co_.translate(k, -k) : co_.translate(k, k);
  return r;
}

ArcSet ArcSet::mirror_lr() const {
  // U(a,b) -> U(-b,-a) and L(a,b) -> L(-b,-a) are low_mirror on the sorted
  // pairs; C(a,b) -> C(-a,-b) negates both stored coordinates, whether the
  // stored y is b or -b.
  ArcSet r(chir_);
  r.up_ = up_.low_mirror();
  r.lo_ = lo_.low_mirror();
  r.co_ = co_.negate_xy();
  return r;
}

ArcSet ArcSet::half_turn() const {
  // U(a,b) <-> L(-b,-a) is low_mirror across the boundary swap; for
  // C(a,b) -> C(-b,-a) the stored map is low_mirror when y is stored as b
  // and the coordinate swap (x,y) -> (y,x) when stored as -b.
  ArcSet r(chir_);
  r.up_ = lo_.low_mirror();
  r.lo_ = up_.low_mirror();
  r.co_ = chir_ == ConnChir::Mir ? co_.low_mirror().negate_xy()
                                 : co_.low_mirror();
  return r;
}

ArcSet ArcSet::coerce(ConnChir chir) const {
  if (chir == chir_) return *this;
  ArcSet r(chir);
  r.up_ = up_;
  r.lo_ = lo_;
  r.co_ = co_.mirror_y();  // throws InputError when not representable
  return r;
}

std::vector<ArcOrEdge> ArcSet::enumerate_window(const Window& w) const {
  Region box = Region::of(Zone::make(w.lo, w.hi, w.lo, w.hi));
  Region conn_box =
      chir_ == ConnChir::Mir
          ? Region::of(Zone::make(w.lo, w.hi, -w.hi, -w.lo))
          : box;
  std::vector<ArcOrEdge> out;
  for (auto [a, b] : up_.intersect(box).enumerate())
    out.push_back(ArcOrEdge::upper_arc(a, b));
  for (auto [a, b] : lo_.intersect(box).enumerate())
    out.push_back(ArcOrEdge::lower_arc(a, b));
  for (auto [a, b] : co_.intersect(conn_box).enumerate())
    out.push_back(
        ArcOrEdge::conn_arc(a, chir_ == ConnChir::Mir ? -b : b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArcOrEdge> ArcSet::enumerate_all(std::size_t cap) const {
  if (!is_finite())
    throw InputError("cannot enumerate an infinite arc set");
  std::vector<ArcOrEdge> out;
  for (auto [a, b] : up_.enumerate(cap))
    out.push_back(ArcOrEdge::upper_arc(a, b));
  for (auto [a, b] : lo_.enumerate(cap))
    out.push_back(ArcOrEdge::lower_arc(a, b));
  for (auto [a, b] : co_.enumerate(cap))
    out.push_back(
        ArcOrEdge::conn_arc(a, chir_ == ConnChir::Mir ? -b : b));
  std::sort(out.begin(), out.end());
  if (out.size() > cap) throw InputError("arc set enumeration exceeds cap");
  return out;
}

// ---------------------------------------------------------------------------
// Crossing machinery

namespace {

const Region& region_of(const ArcSet& t, SetKind k) {
  switch (k) {
    case SetKind::Up: return t.upper_region();
    case SetKind::Lo: return t.lower_region();
    case SetKind::Co: return t.conn_region_stored();
  }
  std::abort();
}

// Stored region of all arcs of kind `target` crossed by some member of t.
Region cross_image(const ArcSet& t, SetKind target) {
  Region acc;
  for (const CrossCase& c : table(t.chirality())) {
    if (c.k2 != target) continue;
    const Region& src = region_of(t, c.k1);
    if (src.is_empty()) continue;
    acc = acc.union_with(image_one(src, c));
  }
  return acc;
}

}  // namespace

ArcSet cross_region(const ArcOrEdge& u, ConnChir chir) {
  if (!u.is_arc()) return ArcSet(chir);  // edges cross nothing
  ArcSet probe(chir);
  probe.add_arc(u);
  ArcSet r(chir);
  for (SetKind k : {SetKind::Up, SetKind::Lo, SetKind::Co}) {
    Region img = cross_image(probe, k);
    switch (k) {
      case SetKind::Up:
        for (const Zone& z : img.zones()) r.add_upper_zone(z);
        break;
      case SetKind::Lo:
        for (const Zone& z : img.zones()) r.add_lower_zone(z);
        break;
      case SetKind::Co:
        for (const Zone& z : img.zones()) r.add_conn_zone_stored(z);
        break;
    }
  }
  return r;
}

ArcSet crossers_in(const ArcSet& t, const ArcOrEdge& u) {
  return t.intersect(cross_region(u, t.chirality()));
}

ArcSet ArcSet::nc() const {
  ArcSet r(chir_);
  r.up_ = valid_region(SetKind::Up).difference(cross_image(*this, SetKind::Up));
  r.lo_ = valid_region(SetKind::Lo).difference(cross_image(*this, SetKind::Lo));
  r.co_ = Region::full().difference(cross_image(*this, SetKind::Co));
  return r;
}

bool ArcSet::is_noncrossing() const {
  return up_.intersect(cross_image(*this, SetKind::Up)).is_empty() &&
         lo_.intersect(cross_image(*this, SetKind::Lo)).is_empty() &&
         co_.intersect(cross_image(*this, SetKind::Co)).is_empty();
}

namespace {

// Visits every corner zone of every crossing pair of members of t.  The
// callback receives the stored zone and its family; returning false stops
// the scan early.
template <typename F>
void for_each_corner_zone(const ArcSet& t, F&& visit) {
  for (const CrossCase& c : table(t.chirality())) {
    Region r1 = apply_xf(region_of(t, c.k1), c.xf1);
    Region r2 = apply_xf(region_of(t, c.k2), c.xf2);
    if (r1.is_empty() || r2.is_empty()) continue;
    for (const Zone& z1 : r1.zones()) {
      for (const Zone& z2 : r2.zones()) {
        Dbm base;
        base.constrain_zone(kSlotX1, kSlotY1, z1);
        base.constrain_zone(kSlotX1, kSlotY1, valid_zone(c.k1));
        base.constrain_zone(kSlotX2, kSlotY2, z2);
        base.constrain_zone(kSlotX2, kSlotY2, valid_zone(c.k2));
        for (const DiffCon& dc : c.cons) base.constrain(dc);
        if (!base.close()) continue;
        for (const CornerSel& sel : c.corner) {
          Zone zc = base.project(sel.s1, sel.s2);
          if (sel.mirror_out) zc = zc.low_mirror();
          Region clipped =
              Region({zc}).intersect(valid_region(sel.out));
          for (const Zone& out : clipped.zones())
            if (!visit(sel.out, out)) return;
        }
      }
    }
  }
}

}  // namespace

bool ArcSet::is_ptolemy() const {
  bool ok = true;
  for_each_corner_zone(*this, [&](SetKind k, const Zone& z) {
    if (!Region({z}).subset_of(region_of(*this, k))) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

ArcSet ArcSet::corners_closure_step() const {
  ArcSet r = *this;
  for_each_corner_zone(*this, [&](SetKind k, const Zone& z) {
    switch (k) {
      case SetKind::Up: r.up_ = r.up_.union_with(Region({z})); break;
      case SetKind::Lo: r.lo_ = r.lo_.union_with(Region({z})); break;
      case SetKind::Co: r.co_ = r.co_.union_with(Region({z})); break;
    }
    return true;
  });
  return r;
}

ArcSet ArcSet::ptolemy_closure() const {
  if (!is_finite())
    throw InputError("recombination closure requires a finite arc set");
  ArcSet cur = *this;
  for (int step = 0; step < 64; ++step) {
    ArcSet next = cur.corners_closure_step();
    if (next.equals(cur)) return cur;
    cur = next;
  }
  throw InternalInvariantError(
      "recombination closure failed to stabilize on a finite set");
}

// ---------------------------------------------------------------------------
// Fans and boundedness

ArcSet::FanSlices ArcSet::fan_slices(MarkedPoint p) const {
  FanSlices f;
  if (p.boundary == Boundary::Upper) {
    f.toward_lesser = slice_at_y(up_, p.index);
    f.toward_greater = slice_at_x(up_, p.index);
    f.opposite = chir_ == ConnChir::Mir
                     ? slice_at_x(co_, p.index).negate()
                     : slice_at_x(co_, p.index);
  } else {
    f.toward_lesser = slice_at_y(lo_, p.index);
    f.toward_greater = slice_at_x(lo_, p.index);
    f.opposite = chir_ == ConnChir::Mir ? slice_at_y(co_, -p.index)
                                        : slice_at_y(co_, p.index);
  }
  return f;
}

IntervalSet ArcSet::unbounded_point_set(Boundary boundary,
                                        BoundDirection dir) const {
  IntervalSet s;
  bool mir = chir_ == ConnChir::Mir;
  auto add_x = [&](const Zone& z) {
    s = s.union_with(IntervalSet::interval(z.x_lo, z.x_hi));
  };
  auto add_y = [&](const Zone& z) {
    s = s.union_with(IntervalSet::interval(z.y_lo, z.y_hi));
  };
  auto add_neg_y = [&](const Zone& z) {
    s = s.union_with(
        IntervalSet::interval(sat_neg(z.y_hi), sat_neg(z.y_lo)));
  };
  if (boundary == Boundary::Upper) {
    switch (dir) {
      case BoundDirection::UpperRight:
        for (const Zone& z : up_.zones())
          if (z.y_hi >= kInf && z.d_hi >= kInf) add_x(z);
        break;
      case BoundDirection::UpperLeft:
        for (const Zone& z : up_.zones())
          if (z.x_lo <= -kInf && z.d_hi >= kInf) add_y(z);
        break;
      case BoundDirection::LowerLeft:
        for (const Zone& z : co_.zones()) {
          if (!mir && z.y_hi >= kInf && z.d_hi >= kInf) add_x(z);
          if (mir && z.y_lo <= -kInf && z.d_lo <= -kInf) add_x(z);
        }
        break;
      case BoundDirection::LowerRight:
        for (const Zone& z : co_.zones()) {
          if (!mir && z.y_lo <= -kInf && z.d_lo <= -kInf) add_x(z);
          if (mir && z.y_hi >= kInf && z.d_hi >= kInf) add_x(z);
        }
        break;
    }
  } else {
    switch (dir) {
      case BoundDirection::LowerLeft:
        for (const Zone& z : lo_.zones())
          if (z.y_hi >= kInf && z.d_hi >= kInf) add_x(z);
        break;
      case BoundDirection::LowerRight:
        for (const Zone& z : lo_.zones())
          if (z.x_lo <= -kInf && z.d_hi >= kInf) add_y(z);
        break;
      case BoundDirection::UpperRight:
        for (const Zone& z : co_.zones()) {
          if (!mir && z.x_hi >= kInf && z.d_lo <= -kInf) add_y(z);
          if (mir && z.x_hi >= kInf && z.d_lo <= -kInf) add_neg_y(z);
        }
        break;
      case BoundDirection::UpperLeft:
        for (const Zone& z : co_.zones()) {
          if (!mir && z.x_lo <= -kInf && z.d_hi >= kInf) add_y(z);
          if (mir && z.x_lo <= -kInf && z.d_hi >= kInf) add_neg_y(z);
        }
        break;
    }
  }
  return s;
}

bool ArcSet::bounded_at(MarkedPoint p, BoundDirection dir) const {
  return !unbounded_point_set(p.boundary, dir).contains(p.index);
}

std::string ArcSet::str() const {
  std::string s = "upper " + up_.str() + "; lower " + lo_.str() + "; conn";
  if (chir_ == ConnChir::Mir) s += " (mirrored)";
  s += " " + co_.str();
  return s;
}

}  // namespace arcstrip
