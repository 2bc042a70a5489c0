// Parsing and serialization of presentations.  Two input shapes share one
// collector: a JSON document (keys: arcs, families, sugar) and a line
// shorthand (arc literals, half-line rules, fan rules, quadrant rules).
// Every error names the line or the JSON field it came from.
#include "arcstrip/presentation.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace arcstrip {

namespace {

using nlohmann::json;

// Everything a document can contribute, gathered before the arc set is
// built: the connecting-region chirality depends on the whole file.
struct Collector {
  std::vector<ArcOrEdge> arcs;
  std::vector<Zone> upper;
  std::vector<Zone> lower;
  std::vector<std::pair<Zone, std::string>> conn_std;  // zone + source tag
  std::vector<Zone> conn_mirror;
  std::vector<Zone> ng;
  bool saw_strip = false;
  bool saw_chords = false;
};

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw InputError(where + ": " + msg);
}

// ---- shared rule semantics ------------------------------------------------

void add_zone_checked(Collector& c, int target, std::optional<Zone> z) {
  if (!z) return;  // empty family, nothing to add
  switch (target) {
    case 0: c.upper.push_back(*z); break;
    case 1: c.lower.push_back(*z); break;
    default: c.conn_std.emplace_back(*z, std::string()); break;
  }
  c.saw_strip = true;
}

void tag_last_conn(Collector& c, const std::string& where) {
  if (!c.conn_std.empty() && c.conn_std.back().second.empty())
    c.conn_std.back().second = where;
}

// Half-line rule: every arc on one boundary with both endpoints past a
// threshold.  Upper arcs always satisfy x < y, so one bound suffices.
void rule_halfline(Collector& c, char boundary, bool ge, i64 p,
                   const std::string& where) {
  if (boundary != 'L' && boundary != 'R')
    fail(where, "half-line rule must start with L or R");
  std::optional<Zone> z = ge ? Zone::make(p, kInf, -kInf, kInf)
                             : Zone::make(-kInf, kInf, -kInf, p);
  add_zone_checked(c, boundary == 'L' ? 0 : 1, z);
}

// Fan rule: all arcs of one kind through a fixed marked point, with the
// far endpoint bounded on one side.
void rule_fan(Collector& c, char kind, char pt_boundary, i64 pt_index,
              bool far_le, i64 bound, const std::string& where) {
  const bool at_upper = (pt_boundary == 'L');
  if (kind == 'C') {
    std::optional<Zone> z;
    if (at_upper)
      z = far_le ? Zone::make(pt_index, pt_index, -kInf, bound)
                 : Zone::make(pt_index, pt_index, bound, kInf);
    else
      z = far_le ? Zone::make(-kInf, bound, pt_index, pt_index)
                 : Zone::make(bound, kInf, pt_index, pt_index);
    add_zone_checked(c, 2, z);
    tag_last_conn(c, where);
    return;
  }
  if (kind == 'U' && !at_upper)
    fail(where, "an upper fan must be based at an upper point L(i)");
  if (kind == 'L' && at_upper)
    fail(where, "a lower fan must be based at a lower point R(j)");
  // Both endpoints sit on one boundary, so the far range must stay on one
  // side of the base point; a straddling range is two families.
  if (far_le && bound >= pt_index)
    fail(where, "fan bound must stay below the base point; split the rule");
  if (!far_le && bound <= pt_index)
    fail(where, "fan bound must stay above the base point; split the rule");
  std::optional<Zone> z =
      far_le ? Zone::make(-kInf, bound, pt_index, pt_index)
             : Zone::make(pt_index, pt_index, bound, kInf);
  add_zone_checked(c, kind == 'U' ? 0 : 1, z);
}

// Quadrant rule: connecting arcs with each endpoint bounded on one side.
void rule_quadrant(Collector& c, bool a_le, i64 a, bool b_le, i64 b,
                   const std::string& where) {
  std::optional<Zone> z = Zone::make(a_le ? -kInf : a, a_le ? a : kInf,
                                     b_le ? -kInf : b, b_le ? b : kInf);
  add_zone_checked(c, 2, z);
  tag_last_conn(c, where);
}

// ---- arc literals ---------------------------------------------------------

// try_parse_arc answers yes/no only; on failure, re-run the arc factory to
// recover the reason (edge spans are the common mistake).
[[noreturn]] void diagnose_arc_literal(const std::string& text,
                                       const std::string& where) {
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto read_int = [&]() -> std::optional<i64> {
    skip();
    size_t j = i;
    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
    size_t digits = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == digits) return std::nullopt;
    i64 v = 0;
    try {
      v = std::stoll(text.substr(i, j - i));
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
    i = j;
    return v;
  };
  skip();
  if (i < text.size() && (text[i] == 'U' || text[i] == 'L' || text[i] == 'C')) {
    char tag = text[i++];
    skip();
    if (i < text.size() && text[i] == '(') {
      ++i;
      auto a = read_int();
      skip();
      if (a && i < text.size() && text[i] == ',') {
        ++i;
        auto b = read_int();
        skip();
        if (b && i < text.size() && text[i] == ')') {
          ++i;
          skip();
          if (i == text.size()) {
            // Syntactically fine, so the span itself is invalid.
            try {
              if (tag == 'U') ArcOrEdge::upper_arc(*a, *b);
              else if (tag == 'L') ArcOrEdge::lower_arc(*a, *b);
              else ArcOrEdge::conn_arc(*a, *b);
            } catch (const InputError& e) {
              fail(where, std::string("'") + text + "' is not an arc: " + e.what());
            }
          }
        }
      }
    }
  }
  fail(where, "unrecognized rule '" + text + "'");
}

void add_arc_literal(Collector& c, const std::string& text,
                     const std::string& where) {
  std::optional<ArcOrEdge> a = try_parse_arc(text);
  if (!a) diagnose_arc_literal(text, where);
  c.arcs.push_back(*a);
  c.saw_strip = true;
}

// ---- line shorthand -------------------------------------------------------

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
  bool eat(char ch) {
    skip_ws();
    if (i < s.size() && s[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(const char* w) {
    skip_ws();
    size_t n = std::string(w).size();
    if (s.compare(i, n, w) == 0) {
      i += n;
      return true;
    }
    return false;
  }
  // <= or >=; true means <=
  std::optional<bool> eat_rel() {
    skip_ws();
    if (s.compare(i, 2, "<=") == 0) {
      i += 2;
      return true;
    }
    if (s.compare(i, 2, ">=") == 0) {
      i += 2;
      return false;
    }
    return std::nullopt;
  }
  std::optional<i64> eat_int() {
    skip_ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t digits = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits) return std::nullopt;
    i64 v = 0;
    try {
      v = std::stoll(s.substr(i, j - i));
    } catch (const std::out_of_range&) {
      return std::nullopt;
    }
    i = j;
    return v;
  }
};

i64 checked_bound(std::optional<i64> v, const std::string& where) {
  if (!v) fail(where, "expected an integer bound");
  if (*v >= kInf || *v <= -kInf) fail(where, "bound out of range");
  return *v;
}

// fan <U|L|C> from=<L(i)|R(j)> q<=N  (or q>=N)
void parse_fan_line(Collector& c, Cursor& cur, const std::string& where) {
  cur.skip_ws();
  char kind = (cur.i < cur.s.size()) ? cur.s[cur.i] : '\0';
  if (kind != 'U' && kind != 'L' && kind != 'C')
    fail(where, "fan kind must be U, L, or C");
  ++cur.i;
  if (!cur.eat_word("from=")) fail(where, "expected from=<point> in fan rule");
  cur.skip_ws();
  char pb = (cur.i < cur.s.size()) ? cur.s[cur.i] : '\0';
  if (pb != 'L' && pb != 'R')
    fail(where, "fan base point must be L(i) or R(j)");
  ++cur.i;
  if (!cur.eat('(')) fail(where, "expected ( after the base point name");
  i64 idx = checked_bound(cur.eat_int(), where);
  if (!cur.eat(')')) fail(where, "expected ) after the base point index");
  if (!cur.eat('q')) fail(where, "fan rule must bound the far endpoint q");
  std::optional<bool> rel = cur.eat_rel();
  if (!rel) fail(where, "expected <= or >= after q");
  i64 bound = checked_bound(cur.eat_int(), where);
  if (!cur.done()) fail(where, "trailing text after fan rule");
  rule_fan(c, kind, pb, idx, *rel, bound, where);
}

// quadrant a<=P b>=Q  (each of a, b takes <= or >=)
void parse_quadrant_line(Collector& c, Cursor& cur, const std::string& where) {
  if (!cur.eat('a')) fail(where, "expected a<=... or a>=... in quadrant rule");
  std::optional<bool> ra = cur.eat_rel();
  if (!ra) fail(where, "expected <= or >= after a");
  i64 av = checked_bound(cur.eat_int(), where);
  if (!cur.eat('b')) fail(where, "expected b<=... or b>=... in quadrant rule");
  std::optional<bool> rb = cur.eat_rel();
  if (!rb) fail(where, "expected <= or >= after b");
  i64 bv = checked_bound(cur.eat_int(), where);
  if (!cur.done()) fail(where, "trailing text after quadrant rule");
  rule_quadrant(c, *ra, av, *rb, bv, where);
}

void parse_dsl(Collector& c, const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    const std::string where = "line " + std::to_string(lineno);

    Cursor cur{line, 0};
    if (cur.eat_word("fan") && (cur.i == line.size() || std::isspace(static_cast<unsigned char>(line[cur.i])))) {
      parse_fan_line(c, cur, where);
      continue;
    }
    cur.i = 0;
    if (cur.eat_word("quadrant") && (cur.i == line.size() || std::isspace(static_cast<unsigned char>(line[cur.i])))) {
      parse_quadrant_line(c, cur, where);
      continue;
    }
    // Half-line rule: L or R followed by a relation.
    cur.i = 0;
    if (line.size() >= 2 && (line[0] == 'L' || line[0] == 'R')) {
      Cursor h{line, 1};
      std::optional<bool> rel = h.eat_rel();
      if (rel) {
        i64 p = checked_bound(h.eat_int(), where);
        if (!h.done()) fail(where, "trailing text after half-line rule");
        rule_halfline(c, line[0], !*rel, p, where);
        continue;
      }
    }
    add_arc_literal(c, line, where);
  }
}

// ---- JSON form ------------------------------------------------------------

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) fail(where, "unknown key '" + it.key() + "'");
  }
}

i64 json_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  i64 x = v.get<i64>();
  if (x >= kInf || x <= -kInf) fail(where, "integer out of range");
  return x;
}

std::string json_str(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

std::optional<Zone> json_zone(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected a zone object");
  require_keys(v, {"x_min", "x_max", "y_min", "y_max", "d_min", "d_max"}, where);
  auto bound = [&](const char* k, i64 dflt) {
    auto it = v.find(k);
    return it == v.end() ? dflt : json_int(*it, where + "." + k);
  };
  return Zone::make(bound("x_min", -kInf), bound("x_max", kInf),
                    bound("y_min", -kInf), bound("y_max", kInf),
                    bound("d_min", -kInf), bound("d_max", kInf));
}

void json_family(Collector& c, const json& fam, const std::string& where) {
  if (!fam.is_object()) fail(where, "expected a family object");
  require_keys(fam, {"kind", "zone"}, where);
  auto kit = fam.find("kind");
  if (kit == fam.end()) fail(where, "missing key 'kind'");
  auto zit = fam.find("zone");
  if (zit == fam.end()) fail(where, "missing key 'zone'");
  std::string kind = json_str(*kit, where + ".kind");
  std::optional<Zone> z = json_zone(*zit, where + ".zone");
  if (kind == "upper") {
    add_zone_checked(c, 0, z);
  } else if (kind == "lower") {
    add_zone_checked(c, 1, z);
  } else if (kind == "conn") {
    add_zone_checked(c, 2, z);
    tag_last_conn(c, where);
  } else if (kind == "conn_mirror") {
    if (z) c.conn_mirror.push_back(*z);
    c.saw_strip = true;
  } else if (kind == "ng") {
    if (z) c.ng.push_back(*z);
    c.saw_chords = true;
  } else {
    fail(where + ".kind", "unknown family kind '" + kind + "'");
  }
}

void json_sugar(Collector& c, const json& rule, const std::string& where) {
  if (!rule.is_object()) fail(where, "expected a sugar object");
  require_keys(rule, {"name", "params"}, where);
  auto nit = rule.find("name");
  if (nit == rule.end()) fail(where, "missing key 'name'");
  std::string name = json_str(*nit, where + ".name");
  auto pit = rule.find("params");
  if (pit == rule.end()) fail(where, "missing key 'params'");
  const json& p = *pit;
  const std::string pw = where + ".params";
  if (!p.is_object()) fail(pw, "expected a params object");

  auto rel_of = [&](const json& v, const std::string& w) {
    std::string s = json_str(v, w);
    if (s == "le") return true;
    if (s == "ge") return false;
    fail(w, "expected \"le\" or \"ge\"");
  };
  auto need = [&](const char* k) -> const json& {
    auto it = p.find(k);
    if (it == p.end()) fail(pw, std::string("missing key '") + k + "'");
    return *it;
  };

  if (name == "L_ge" || name == "L_le" || name == "R_ge" || name == "R_le") {
    require_keys(p, {"p"}, pw);
    i64 v = json_int(need("p"), pw + ".p");
    rule_halfline(c, name[0], name[2] == 'g', v, pw);
  } else if (name == "fan") {
    require_keys(p, {"kind", "from", "dir", "bound"}, pw);
    std::string kind = json_str(need("kind"), pw + ".kind");
    if (kind != "U" && kind != "L" && kind != "C")
      fail(pw + ".kind", "fan kind must be U, L, or C");
    std::string from = json_str(need("from"), pw + ".from");
    Cursor cur{from, 0};
    cur.skip_ws();
    char pb = (cur.i < from.size()) ? from[cur.i] : '\0';
    if (pb != 'L' && pb != 'R')
      fail(pw + ".from", "base point must be L(i) or R(j)");
    ++cur.i;
    if (!cur.eat('(')) fail(pw + ".from", "base point must be L(i) or R(j)");
    std::optional<i64> idx = cur.eat_int();
    if (!idx || !cur.eat(')') || !cur.done())
      fail(pw + ".from", "base point must be L(i) or R(j)");
    bool le = rel_of(need("dir"), pw + ".dir");
    i64 bound = json_int(need("bound"), pw + ".bound");
    rule_fan(c, kind[0], pb, *idx, le, bound, pw);
  } else if (name == "quadrant") {
    require_keys(p, {"a_dir", "a", "b_dir", "b"}, pw);
    bool ra = rel_of(need("a_dir"), pw + ".a_dir");
    i64 av = json_int(need("a"), pw + ".a");
    bool rb = rel_of(need("b_dir"), pw + ".b_dir");
    i64 bv = json_int(need("b"), pw + ".b");
    rule_quadrant(c, ra, av, rb, bv, pw);
  } else {
    fail(where + ".name", "unknown sugar rule '" + name + "'");
  }
}

void parse_json(Collector& c, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("JSON: top level must be an object");
  require_keys(doc, {"arcs", "families", "sugar"}, "document");
  auto ait = doc.find("arcs");
  if (ait != doc.end()) {
    if (!ait->is_array()) fail("arcs", "expected an array");
    for (size_t i = 0; i < ait->size(); ++i) {
      const std::string where = "arcs[" + std::to_string(i) + "]";
      add_arc_literal(c, json_str((*ait)[i], where), where);
    }
  }
  auto fit = doc.find("families");
  if (fit != doc.end()) {
    if (!fit->is_array()) fail("families", "expected an array");
    for (size_t i = 0; i < fit->size(); ++i)
      json_family(c, (*fit)[i], "families[" + std::to_string(i) + "]");
  }
  auto sit = doc.find("sugar");
  if (sit != doc.end()) {
    if (!sit->is_array()) fail("sugar", "expected an array");
    for (size_t i = 0; i < sit->size(); ++i)
      json_sugar(c, (*sit)[i], "sugar[" + std::to_string(i) + "]");
  }
}

}  // namespace

ParsedDoc parse_presentation_doc(const std::string& text) {
  Collector c;
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    parse_json(c, text);
  else
    parse_dsl(c, text);

  ParsedDoc doc;
  doc.has_strip = c.saw_strip;
  doc.has_chords = c.saw_chords;
  if (!c.conn_mirror.empty()) doc.strip = ArcSet(ConnChir::Mir);
  for (const ArcOrEdge& a : c.arcs) doc.strip.add_arc(a);
  for (const Zone& z : c.upper) doc.strip.add_upper_zone(z);
  for (const Zone& z : c.lower) doc.strip.add_lower_zone(z);
  for (const auto& [z, where] : c.conn_std) {
    try {
      doc.strip.add_conn_zone(z);
    } catch (const InputError& e) {
      fail(where.empty() ? "conn family" : where, e.what());
    }
  }
  for (const Zone& z : c.conn_mirror) doc.strip.add_conn_zone_stored(z);
  for (const Zone& z : c.ng) doc.chords.add_zone(z);
  return doc;
}

ArcSet parse_presentation(const std::string& text) {
  ParsedDoc doc = parse_presentation_doc(text);
  if (doc.has_chords)
    throw InputError("document holds chord families; expected a strip presentation");
  return doc.strip;
}

NgArcSet parse_ng_presentation(const std::string& text) {
  ParsedDoc doc = parse_presentation_doc(text);
  if (doc.has_strip)
    throw InputError("document holds strip content; expected a chord presentation");
  return doc.chords;
}

namespace {

json zone_json(const Zone& z) {
  json obj = json::object();
  if (z.x_lo > -kInf) obj["x_min"] = z.x_lo;
  if (z.x_hi < kInf) obj["x_max"] = z.x_hi;
  if (z.y_lo > -kInf) obj["y_min"] = z.y_lo;
  if (z.y_hi < kInf) obj["y_max"] = z.y_hi;
  if (z.d_lo > -kInf) obj["d_min"] = z.d_lo;
  if (z.d_hi < kInf) obj["d_max"] = z.d_hi;
  return obj;
}

json family_json(const char* kind, const Zone& z) {
  json obj = json::object();
  obj["kind"] = kind;
  obj["zone"] = zone_json(z);
  return obj;
}

}  // namespace

std::string serialize_presentation(const ArcSet& t) {
  json doc = json::object();
  doc["arcs"] = json::array();
  json fams = json::array();
  for (const Zone& z : t.upper_region().zones()) fams.push_back(family_json("upper", z));
  for (const Zone& z : t.lower_region().zones()) fams.push_back(family_json("lower", z));
  const char* ck = (t.chirality() == ConnChir::Mir) ? "conn_mirror" : "conn";
  for (const Zone& z : t.conn_region_stored().zones()) fams.push_back(family_json(ck, z));
  doc["families"] = fams;
  return doc.dump(2) + "\n";
}

std::string serialize_ng(const NgArcSet& t) {
  json doc = json::object();
  json fams = json::array();
  for (const Zone& z : t.region.zones()) fams.push_back(family_json("ng", z));
  doc["families"] = fams;
  return doc.dump(2) + "\n";
}

}  // namespace arcstrip
