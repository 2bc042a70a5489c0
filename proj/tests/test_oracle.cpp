// The brute-force side of the dual-route design: window enumeration, the
// exact-geometry crossing decision, and plain-loop set predicates.  The
// headline check is geometry vs index rules over a whole window: both
// decide every pair identically, and no curve pair ever produces a
// degenerate contact (the oracle throws instead of guessing).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arcstrip/errors.hpp"
#include "arcstrip/oracle.hpp"

using namespace arcstrip;

namespace {
auto U = ArcOrEdge::upper_arc;
auto L = ArcOrEdge::lower_arc;
auto C = ArcOrEdge::conn_arc;

std::vector<ArcOrEdge> sample_t1() {
  return {U(-2, 1), C(-2, 2), C(-2, -2), C(1, 2), C(1, -2), L(-2, 2)};
}
}  // namespace

TEST_CASE("window arc enumeration and counts") {
  CHECK_THROWS_AS(Window(0, 1), InputError);

  auto w02 = window_arcs(Window(0, 2));
  CHECK(w02.size() == 11);  // 1 upper + 1 lower + 9 connecting

  auto w03 = window_arcs(Window(0, 3));
  CHECK(w03.size() == 22);  // 3 + 3 + 16

  auto w = window_arcs(Window(-5, 5));
  CHECK(w.size() == 211);  // 45 + 45 + 121
  // No duplicates, all within range.
  std::set<ArcOrEdge> uniq(w.begin(), w.end());
  CHECK(uniq.size() == w.size());
  for (const ArcOrEdge& u : w) {
    CHECK(u.is_arc());
    CHECK(u.a() >= -5);
    CHECK(u.a() <= 5);
    CHECK(u.b() >= -5);
    CHECK(u.b() <= 5);
  }
}

TEST_CASE("geometric crossing oracle agrees with the index rules") {
  auto arcs = window_arcs(Window(-5, 5));
  for (const ArcOrEdge& u : arcs)
    for (const ArcOrEdge& v : arcs)
      CHECK_MESSAGE(geom_crossing_oracle(u, v) == crosses(u, v),
                    u.str(), " vs ", v.str());
}

TEST_CASE("parity matters: curves can meet twice without crossing") {
  // The straight representative of C(5,3) dips under no endpoint of
  // U(0,4) yet meets its bump twice; an intersection-nonempty rule would
  // call this a crossing.
  CHECK_FALSE(geom_crossing_oracle(U(0, 4), C(5, 3)));
  CHECK_FALSE(crosses(U(0, 4), C(5, 3)));
  CHECK(geom_crossing_oracle(U(0, 4), C(1, -9)));
  // Shared endpoints are never crossings no matter what the curves do.
  CHECK_FALSE(geom_crossing_oracle(U(0, 4), C(0, -9)));
  CHECK_FALSE(geom_crossing_oracle(U(0, 4), U(4, 8)));
}

TEST_CASE("geometry handles far-flung indices exactly") {
  CHECK(geom_crossing_oracle(C(-40, -35), C(40, 35)) ==
        crosses(C(-40, -35), C(40, 35)));
  CHECK(geom_crossing_oracle(U(-30, 30), C(0, 100)) ==
        crosses(U(-30, 30), C(0, 100)));
  CHECK(geom_crossing_oracle(L(-25, 25), C(90, 0)) ==
        crosses(L(-25, 25), C(90, 0)));
}

TEST_CASE("brute noncrossing and recombination closure") {
  auto t1 = sample_t1();
  CHECK_FALSE(brute_noncrossing(t1));
  CHECK(brute_is_ptolemy(t1));

  // Dropping any recombination side of the crossing pair breaks it.
  for (std::size_t skip = 0; skip < t1.size(); ++skip) {
    if (t1[skip] == C(-2, -2) || t1[skip] == C(1, 2)) continue;
    std::vector<ArcOrEdge> dropped;
    for (std::size_t i = 0; i < t1.size(); ++i)
      if (i != skip) dropped.push_back(t1[i]);
    CHECK_FALSE(brute_is_ptolemy(dropped));
  }

  CHECK(brute_noncrossing({U(0, 2), U(0, 5), L(1, 3)}));
  CHECK(brute_is_ptolemy({}));
}

TEST_CASE("brute shift-basis check") {
  CHECK(brute_tau_basis({U(0, 2)}, {U(0, 2)}));
  CHECK_FALSE(brute_tau_basis({}, {U(0, 2)}));

  // A crossing server needs its middle sides inside the family.
  CHECK_FALSE(brute_tau_basis({C(1, 1)}, {C(0, 0), C(1, 1)}));
  CHECK(brute_tau_basis({C(1, 1)}, {C(0, 0), C(1, 1), C(1, 0), C(0, 1)}));
}
