// Scalar arc semantics: crossing rules, fan order, quadrilateral sides.
// The keystone here is the exhaustive shift-compatibility check: for arcs
// sharing an endpoint p, u2 >= u1 in the fan at p iff u2 crosses the
// shifted arc tau(u1).  That law ties the fan order to the crossing rules,
// so a sign slip in either one cannot survive it.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "arcstrip/errors.hpp"
#include "arcstrip/strip_model.hpp"

using namespace arcstrip;

namespace {

const ArcOrEdge U02 = ArcOrEdge::upper_arc(0, 2);
const ArcOrEdge U13 = ArcOrEdge::upper_arc(1, 3);

std::vector<ArcOrEdge> arcs_at(MarkedPoint p, i64 reach) {
  std::vector<ArcOrEdge> out;
  for (i64 d = 2; d <= reach; ++d) {
    if (p.boundary == Boundary::Upper) {
      out.push_back(ArcOrEdge::upper_arc(p.index - d, p.index));
      out.push_back(ArcOrEdge::upper_arc(p.index, p.index + d));
    } else {
      out.push_back(ArcOrEdge::lower_arc(p.index - d, p.index));
      out.push_back(ArcOrEdge::lower_arc(p.index, p.index + d));
    }
  }
  for (i64 c = -reach; c <= reach; ++c) {
    out.push_back(p.boundary == Boundary::Upper
                      ? ArcOrEdge::conn_arc(p.index, c)
                      : ArcOrEdge::conn_arc(c, p.index));
  }
  return out;
}

}  // namespace

TEST_CASE("arc construction and literals") {
  CHECK(ArcOrEdge::upper_arc(2, 0) == U02);  // sorts
  CHECK_THROWS_AS(ArcOrEdge::upper_arc(0, 1), InputError);
  CHECK_THROWS_AS(ArcOrEdge::lower_arc(3, 3), InputError);
  CHECK(ArcOrEdge::conn_arc(5, 5).is_arc());  // conn pairs are unconstrained

  CHECK(ArcOrEdge::join(upper_point(4), upper_point(3)) ==
        ArcOrEdge::upper_edge(3));
  CHECK(ArcOrEdge::join(lower_point(-1), upper_point(2)) ==
        ArcOrEdge::conn_arc(2, -1));
  CHECK_THROWS_AS(ArcOrEdge::join(upper_point(1), upper_point(1)),
                  InputError);

  CHECK(parse_arc("U(0,2)") == U02);
  CHECK(parse_arc(" C( -3 , 14 ) ") == ArcOrEdge::conn_arc(-3, 14));
  CHECK(parse_arc("L(-5,-2)") == ArcOrEdge::lower_arc(-5, -2));
  CHECK(parse_arc("U(0,2)").str() == "U(0,2)");
  CHECK(ArcOrEdge::upper_edge(1).str() == "UE(1,2)");
  CHECK_FALSE(try_parse_arc("U(0,1)").has_value());  // edge, not an arc
  CHECK_FALSE(try_parse_arc("X(0,2)").has_value());
  CHECK_FALSE(try_parse_arc("U(0,2) tail").has_value());
  CHECK_FALSE(try_parse_arc("U(0 2)").has_value());
  CHECK_THROWS_AS(parse_arc("nope"), InputError);
}

TEST_CASE("crossing rules") {
  auto U = ArcOrEdge::upper_arc;
  auto L = ArcOrEdge::lower_arc;
  auto C = ArcOrEdge::conn_arc;

  CHECK(crosses(U(0, 2), U(1, 3)));
  CHECK(crosses(U(1, 3), U(0, 2)));
  CHECK_FALSE(crosses(U(0, 2), U(2, 4)));   // shared endpoint
  CHECK_FALSE(crosses(U(0, 2), U(0, 5)));   // nested with shared end
  CHECK_FALSE(crosses(U(0, 5), U(1, 3)));   // nested
  CHECK_FALSE(crosses(U(0, 2), U(3, 5)));   // disjoint

  CHECK_FALSE(crosses(U(0, 4), L(0, 4)));   // opposite boundaries never meet
  CHECK_FALSE(crosses(L(-2, 2), U(-2, 2)));

  CHECK(crosses(L(-1, 3), L(0, 4)));
  CHECK_FALSE(crosses(L(-1, 3), L(3, 5)));

  CHECK(crosses(U(0, 4), C(2, -9)));        // conn upper index inside
  CHECK(crosses(C(2, -9), U(0, 4)));
  CHECK_FALSE(crosses(U(0, 4), C(0, 1)));   // shared l_0
  CHECK_FALSE(crosses(U(0, 4), C(4, 1)));
  CHECK_FALSE(crosses(U(0, 4), C(5, 1)));

  CHECK(crosses(L(-2, 2), C(7, 0)));        // conn lower index inside
  CHECK_FALSE(crosses(L(-2, 2), C(7, 2)));
  CHECK_FALSE(crosses(L(-2, 2), C(7, 3)));

  CHECK(crosses(C(0, 0), C(1, 1)));
  CHECK(crosses(C(1, 1), C(0, 0)));
  CHECK_FALSE(crosses(C(0, 0), C(1, -1)));
  CHECK_FALSE(crosses(C(0, 0), C(0, 5)));   // shared l_0
  CHECK_FALSE(crosses(C(0, 0), C(3, 0)));   // shared r_0

  CHECK_FALSE(crosses(ArcOrEdge::upper_edge(0), U(-1, 1)));
  CHECK_FALSE(crosses(C(0, 0), ArcOrEdge::lower_edge(-1)));
}

TEST_CASE("tau shifts every index") {
  CHECK(tau_arc(U02) == ArcOrEdge::upper_arc(1, 3));
  CHECK(tau_arc(ArcOrEdge::conn_arc(-2, 5), 3) == ArcOrEdge::conn_arc(1, 8));
  CHECK(tau_arc(ArcOrEdge::lower_edge(0), -1) == ArcOrEdge::lower_edge(-1));
  auto u = ArcOrEdge::conn_arc(4, -7);
  CHECK(tau_arc(tau_arc(u), -1) == u);
}

TEST_CASE("fan order at an upper point") {
  MarkedPoint p = upper_point(0);
  // From the lesser-index side around to the greater-index side:
  // left edge, then left arcs (nearest first), then conns (largest lower
  // index first), then right arcs (farthest first), then right edge.
  std::vector<ArcOrEdge> chain = {
      ArcOrEdge::upper_edge(-1),      ArcOrEdge::upper_arc(-2, 0),
      ArcOrEdge::upper_arc(-5, 0),    ArcOrEdge::conn_arc(0, 7),
      ArcOrEdge::conn_arc(0, 0),      ArcOrEdge::conn_arc(0, -4),
      ArcOrEdge::upper_arc(0, 9),     ArcOrEdge::upper_arc(0, 2),
      ArcOrEdge::upper_edge(0),
  };
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(fan_compare(p, chain[i], chain[i + 1]) ==
          std::strong_ordering::less);
  CHECK(fan_compare(p, chain[3], chain[3]) == std::strong_ordering::equal);
}

TEST_CASE("fan order at a lower point") {
  MarkedPoint p = lower_point(0);
  std::vector<ArcOrEdge> chain = {
      ArcOrEdge::lower_edge(-1),      ArcOrEdge::lower_arc(-3, 0),
      ArcOrEdge::lower_arc(-6, 0),    ArcOrEdge::conn_arc(5, 0),
      ArcOrEdge::conn_arc(-1, 0),     ArcOrEdge::lower_arc(0, 8),
      ArcOrEdge::lower_arc(0, 2),     ArcOrEdge::lower_edge(0),
  };
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(fan_compare(p, chain[i], chain[i + 1]) ==
          std::strong_ordering::less);
}

TEST_CASE("fan key rejects non-endpoints") {
  CHECK_THROWS_AS(fan_key(upper_point(1), U02), InternalInvariantError);
}

TEST_CASE("fan order matches crossing against the shifted arc") {
  // u2 >= u1 at p  iff  u2 crosses tau(u1), for all arc pairs at p.
  for (MarkedPoint p : {upper_point(0), upper_point(3), lower_point(0),
                        lower_point(-2)}) {
    auto arcs = arcs_at(p, 7);
    for (const ArcOrEdge& u1 : arcs)
      for (const ArcOrEdge& u2 : arcs) {
        bool geq = fan_compare(p, u2, u1) != std::strong_ordering::less;
        CHECK_MESSAGE(geq == crosses(u2, tau_arc(u1)),
                      "p=", p.str(), " u1=", u1.str(), " u2=", u2.str());
      }
  }
}

TEST_CASE("quadrilateral sides of a crossing pair") {
  auto cs = corners_all(U13, U02);
  CHECK(cs.size() == 4);
  std::multiset<ArcOrEdge> expect = {
      ArcOrEdge::upper_edge(0), ArcOrEdge::upper_edge(1),
      ArcOrEdge::upper_arc(0, 3), ArcOrEdge::upper_edge(2)};
  CHECK(std::multiset<ArcOrEdge>(cs.begin(), cs.end()) == expect);

  auto arcs_only = corners(U13, U02);
  CHECK(arcs_only.size() == 1);
  CHECK(arcs_only[0] == ArcOrEdge::upper_arc(0, 3));

  CHECK_THROWS_AS(corners_all(U02, ArcOrEdge::upper_arc(3, 5)), InputError);
}

TEST_CASE("middle terms: frozen examples") {
  auto [m1, m2] = middle_terms(U13, U02);
  std::set<ArcOrEdge> mids = {m1, m2};
  CHECK(mids == std::set<ArcOrEdge>{ArcOrEdge::upper_edge(1),
                                    ArcOrEdge::upper_arc(0, 3)});

  // The reverse direction picks the other opposite pair.
  auto [n1, n2] = middle_terms(U02, U13);
  std::set<ArcOrEdge> back = {n1, n2};
  CHECK(back == std::set<ArcOrEdge>{ArcOrEdge::upper_edge(0),
                                    ArcOrEdge::upper_edge(2)});

  auto [c1, c2] = middle_terms(ArcOrEdge::conn_arc(1, 1),
                               ArcOrEdge::conn_arc(0, 0));
  CHECK(std::set<ArcOrEdge>{c1, c2} ==
        std::set<ArcOrEdge>{ArcOrEdge::conn_arc(1, 0),
                            ArcOrEdge::conn_arc(0, 1)});
}

TEST_CASE("middle terms partition the quadrilateral sides") {
  std::vector<ArcOrEdge> pool;
  for (i64 a = -4; a <= 4; ++a)
    for (i64 b = a + 2; b <= 4; ++b) {
      pool.push_back(ArcOrEdge::upper_arc(a, b));
      pool.push_back(ArcOrEdge::lower_arc(a, b));
    }
  for (i64 a = -4; a <= 4; ++a)
    for (i64 b = -4; b <= 4; ++b) pool.push_back(ArcOrEdge::conn_arc(a, b));

  int checked = 0;
  for (const ArcOrEdge& u : pool)
    for (const ArcOrEdge& v : pool) {
      if (!crosses(u, v)) continue;
      ++checked;
      auto all = corners_all(u, v);
      auto [f1, f2] = middle_terms(u, v);
      auto [g1, g2] = middle_terms(v, u);
      std::multiset<ArcOrEdge> split = {f1, f2, g1, g2};
      CHECK(std::multiset<ArcOrEdge>(all.begin(), all.end()) == split);
      // Opposite sides of the quadrilateral share no endpoint.
      auto [e1, e2] = f1.endpoints();
      CHECK_FALSE(f2.has_endpoint(e1));
      CHECK_FALSE(f2.has_endpoint(e2));
    }
  CHECK(checked > 1000);
}

TEST_CASE("strip symmetries on single curves") {
  auto U = ArcOrEdge::upper_arc;
  auto L = ArcOrEdge::lower_arc;
  auto C = ArcOrEdge::conn_arc;

  CHECK(mirror_arc(U(1, 3)) == U(-3, -1));
  CHECK(mirror_arc(L(-2, 2)) == L(-2, 2));
  CHECK(mirror_arc(C(2, -5)) == C(-2, 5));
  CHECK(mirror_arc(ArcOrEdge::upper_edge(0)) == ArcOrEdge::upper_edge(-1));
  CHECK(mirror_arc(ArcOrEdge::lower_edge(2)) == ArcOrEdge::lower_edge(-3));

  CHECK(half_turn_arc(U(1, 3)) == L(-3, -1));
  CHECK(half_turn_arc(L(-2, 2)) == U(-2, 2));
  CHECK(half_turn_arc(C(2, -5)) == C(5, -2));
  CHECK(half_turn_arc(ArcOrEdge::upper_edge(2)) == ArcOrEdge::lower_edge(-3));

  std::vector<ArcOrEdge> pool;
  for (i64 a = -4; a <= 4; ++a)
    for (i64 b = a + 2; b <= 4; ++b) {
      pool.push_back(U(a, b));
      pool.push_back(L(a, b));
    }
  for (i64 a = -4; a <= 4; ++a)
    for (i64 b = -4; b <= 4; ++b) pool.push_back(C(a, b));
  pool.push_back(ArcOrEdge::upper_edge(-1));
  pool.push_back(ArcOrEdge::lower_edge(3));

  for (const ArcOrEdge& u : pool) {
    // Involutions that invert the shift direction.
    CHECK(mirror_arc(mirror_arc(u)) == u);
    CHECK(half_turn_arc(half_turn_arc(u)) == u);
    CHECK(mirror_arc(tau_arc(u)) == tau_arc(mirror_arc(u), -1));
    CHECK(half_turn_arc(tau_arc(u)) == tau_arc(half_turn_arc(u), -1));
  }
  for (const ArcOrEdge& u : pool)
    for (const ArcOrEdge& v : pool) {
      CHECK(crosses(mirror_arc(u), mirror_arc(v)) == crosses(u, v));
      CHECK(crosses(half_turn_arc(u), half_turn_arc(v)) == crosses(u, v));
    }
}
