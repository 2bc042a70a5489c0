#include "arcstrip/strip_model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "arcstrip/errors.hpp"

namespace arcstrip {

ArcOrEdge ArcOrEdge::upper_arc(i64 a, i64 b) {
  if (a > b) std::swap(a, b);
  if (b - a < 2)
    throw InputError("upper arc needs endpoints at distance >= 2, got (" +
                     std::to_string(a) + "," + std::to_string(b) + ")");
  return ArcOrEdge(ArcKind::UpperArc, a, b);
}

ArcOrEdge ArcOrEdge::lower_arc(i64 a, i64 b) {
  if (a > b) std::swap(a, b);
  if (b - a < 2)
    throw InputError("lower arc needs endpoints at distance >= 2, got (" +
                     std::to_string(a) + "," + std::to_string(b) + ")");
  return ArcOrEdge(ArcKind::LowerArc, a, b);
}

ArcOrEdge ArcOrEdge::conn_arc(i64 a, i64 b) {
  return ArcOrEdge(ArcKind::ConnArc, a, b);
}

ArcOrEdge ArcOrEdge::upper_edge(i64 i) {
  return ArcOrEdge(ArcKind::UpperEdge, i, i + 1);
}

ArcOrEdge ArcOrEdge::lower_edge(i64 i) {
  return ArcOrEdge(ArcKind::LowerEdge, i, i + 1);
}

ArcOrEdge ArcOrEdge::join(MarkedPoint p, MarkedPoint q) {
  if (p == q) throw InputError("cannot join a marked point to itself");
  if (p.boundary == q.boundary) {
    i64 a = std::min(p.index, q.index), b = std::max(p.index, q.index);
    if (b - a == 1)
      return p.boundary == Boundary::Upper ? upper_edge(a) : lower_edge(a);
    return p.boundary == Boundary::Upper ? upper_arc(a, b) : lower_arc(a, b);
  }
  if (p.boundary == Boundary::Lower) std::swap(p, q);
  return conn_arc(p.index, q.index);
}

std::pair<MarkedPoint, MarkedPoint> ArcOrEdge::endpoints() const {
  switch (kind_) {
    case ArcKind::UpperArc:
    case ArcKind::UpperEdge:
      return {upper_point(a_), upper_point(b_)};
    case ArcKind::LowerArc:
    case ArcKind::LowerEdge:
      return {lower_point(a_), lower_point(b_)};
    case ArcKind::ConnArc:
      return {upper_point(a_), lower_point(b_)};
  }
  std::abort();
}

bool ArcOrEdge::has_endpoint(MarkedPoint p) const {
  auto [e1, e2] = endpoints();
  return p == e1 || p == e2;
}

MarkedPoint ArcOrEdge::other_endpoint(MarkedPoint p) const {
  auto [e1, e2] = endpoints();
  if (p == e1) return e2;
  if (p == e2) return e1;
  throw InternalInvariantError("other_endpoint: " + p.str() +
                               " is not an endpoint of " + str());
}

std::string ArcOrEdge::str() const {
  const char* tag = nullptr;
  switch (kind_) {
    case ArcKind::UpperArc: tag = "U"; break;
    case ArcKind::LowerArc: tag = "L"; break;
    case ArcKind::ConnArc: tag = "C"; break;
    case ArcKind::UpperEdge: tag = "UE"; break;
    case ArcKind::LowerEdge: tag = "LE"; break;
  }
  return std::string(tag) + "(" + std::to_string(a_) + "," +
         std::to_string(b_) + ")";
}

ArcOrEdge tau_arc(const ArcOrEdge& u, i64 k) {
  switch (u.kind()) {
    case ArcKind::UpperArc: return ArcOrEdge::upper_arc(u.a() + k, u.b() + k);
    case ArcKind::LowerArc: return ArcOrEdge::lower_arc(u.a() + k, u.b() + k);
    case ArcKind::ConnArc: return ArcOrEdge::conn_arc(u.a() + k, u.b() + k);
    case ArcKind::UpperEdge: return ArcOrEdge::upper_edge(u.a() + k);
    case ArcKind::LowerEdge: return ArcOrEdge::lower_edge(u.a() + k);
  }
  std::abort();
}

ArcOrEdge mirror_arc(const ArcOrEdge& u) {
  switch (u.kind()) {
    case ArcKind::UpperArc: return ArcOrEdge::upper_arc(-u.b(), -u.a());
    case ArcKind::LowerArc: return ArcOrEdge::lower_arc(-u.b(), -u.a());
    case ArcKind::ConnArc: return ArcOrEdge::conn_arc(-u.a(), -u.b());
    case ArcKind::UpperEdge: return ArcOrEdge::upper_edge(-u.a() - 1);
    case ArcKind::LowerEdge: return ArcOrEdge::lower_edge(-u.a() - 1);
  }
  std::abort();
}

ArcOrEdge half_turn_arc(const ArcOrEdge& u) {
  switch (u.kind()) {
    case ArcKind::UpperArc: return ArcOrEdge::lower_arc(-u.b(), -u.a());
    case ArcKind::LowerArc: return ArcOrEdge::upper_arc(-u.b(), -u.a());
    case ArcKind::ConnArc: return ArcOrEdge::conn_arc(-u.b(), -u.a());
    case ArcKind::UpperEdge: return ArcOrEdge::lower_edge(-u.a() - 1);
    case ArcKind::LowerEdge: return ArcOrEdge::upper_edge(-u.a() - 1);
  }
  std::abort();
}

bool crosses(const ArcOrEdge& u, const ArcOrEdge& v) {
  if (u.is_edge() || v.is_edge()) return false;
  auto interleave = [](i64 i, i64 j, i64 p, i64 q) {
    return (i < p && p < j && j < q) || (p < i && i < q && q < j);
  };
  switch (u.kind()) {
    case ArcKind::UpperArc:
      switch (v.kind()) {
        case ArcKind::UpperArc:
          return interleave(u.a(), u.b(), v.a(), v.b());
        case ArcKind::LowerArc:
          return false;
        case ArcKind::ConnArc:
          return u.a() < v.a() && v.a() < u.b();
        default: return false;
      }
    case ArcKind::LowerArc:
      switch (v.kind()) {
        case ArcKind::UpperArc:
          return false;
        case ArcKind::LowerArc:
          return interleave(u.a(), u.b(), v.a(), v.b());
        case ArcKind::ConnArc:
          return u.a() < v.b() && v.b() < u.b();
        default: return false;
      }
    case ArcKind::ConnArc:
      switch (v.kind()) {
        case ArcKind::UpperArc:
          return v.a() < u.a() && u.a() < v.b();
        case ArcKind::LowerArc:
          return v.a() < u.b() && u.b() < v.b();
        case ArcKind::ConnArc:
          return (u.a() < v.a() && u.b() < v.b()) ||
                 (v.a() < u.a() && v.b() < u.b());
        default: return false;
      }
    default: return false;
  }
}

FanKey fan_key(MarkedPoint p, const ArcOrEdge& u) {
  MarkedPoint o = u.other_endpoint(p);
  int cls;
  if (o.boundary != p.boundary) {
    cls = 1;
  } else if (o.index < p.index) {
    cls = 0;
  } else {
    cls = 2;
  }
  return FanKey{cls, -o.index};
}

std::strong_ordering fan_compare(MarkedPoint p, const ArcOrEdge& u,
                                 const ArcOrEdge& v) {
  return fan_key(p, u) <=> fan_key(p, v);
}

std::vector<ArcOrEdge> corners_all(const ArcOrEdge& u, const ArcOrEdge& v) {
  if (!crosses(u, v))
    throw InputError("corners of a non-crossing pair: " + u.str() + ", " +
                     v.str());
  auto [p1, p2] = u.endpoints();
  auto [q1, q2] = v.endpoints();
  return {ArcOrEdge::join(p1, q1), ArcOrEdge::join(p1, q2),
          ArcOrEdge::join(p2, q1), ArcOrEdge::join(p2, q2)};
}

std::vector<ArcOrEdge> corners(const ArcOrEdge& u, const ArcOrEdge& v) {
  std::vector<ArcOrEdge> out;
  for (const ArcOrEdge& c : corners_all(u, v))
    if (c.is_arc()) out.push_back(c);
  return out;
}

std::pair<ArcOrEdge, ArcOrEdge> middle_terms(const ArcOrEdge& from,
                                             const ArcOrEdge& to) {
  std::vector<ArcOrEdge> mids;
  for (const ArcOrEdge& c : corners_all(from, to)) {
    auto [e1, e2] = c.endpoints();
    MarkedPoint pf = from.has_endpoint(e1) ? e1 : e2;
    MarkedPoint pt = c.other_endpoint(pf);
    if (fan_compare(pf, from, c) == std::strong_ordering::less &&
        fan_compare(pt, c, to) == std::strong_ordering::less)
      mids.push_back(c);
  }
  if (mids.size() != 2)
    throw InternalInvariantError("crossing pair " + from.str() + ", " +
                                 to.str() + " has " +
                                 std::to_string(mids.size()) +
                                 " middle sides, expected 2");
  return {mids[0], mids[1]};
}

namespace {

bool parse_i64(const std::string& s, std::size_t& pos, i64& out) {
  while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
  if (pos == digits) return false;
  out = std::stoll(s.substr(start, pos - start));
  while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  return true;
}

}  // namespace

std::optional<ArcOrEdge> try_parse_arc(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  if (pos >= text.size()) return std::nullopt;
  char tag = text[pos++];
  if (tag != 'U' && tag != 'L' && tag != 'C') return std::nullopt;
  while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  if (pos >= text.size() || text[pos] != '(') return std::nullopt;
  ++pos;
  i64 a, b;
  if (!parse_i64(text, pos, a)) return std::nullopt;
  if (pos >= text.size() || text[pos] != ',') return std::nullopt;
  ++pos;
  if (!parse_i64(text, pos, b)) return std::nullopt;
  if (pos >= text.size() || text[pos] != ')') return std::nullopt;
  ++pos;
  while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  if (pos != text.size()) return std::nullopt;
  try {
    switch (tag) {
      case 'U': return ArcOrEdge::upper_arc(a, b);
      case 'L': return ArcOrEdge::lower_arc(a, b);
      default: return ArcOrEdge::conn_arc(a, b);
    }
  } catch (const InputError&) {
    return std::nullopt;
  }
}

ArcOrEdge parse_arc(const std::string& text) {
  auto u = try_parse_arc(text);
  if (!u) throw InputError("malformed arc literal: '" + text + "'");
  return *u;
}

}  // namespace arcstrip
