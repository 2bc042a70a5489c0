#pragma once

/*
 * Independent checkers used to validate the symbolic engine.  Everything
 * here works on explicit finite data and shares as little code as possible
 * with the region machinery: crossings are re-decided geometrically from
 * exact rational curve representatives, and the set-level predicates are
 * plain loops over arc vectors.
 */

#include <vector>

#include "arcstrip/arcset.hpp"
#include "arcstrip/strip_model.hpp"

namespace arcstrip {

// Every arc with both endpoint indices inside the window: uppers, lowers,
// then connecting arcs, lexicographically within each family.
std::vector<ArcOrEdge> window_arcs(const Window& w);

// Decides crossing from drawn representatives: each arc becomes an exact
// rational curve in the strip (straight segments for connecting arcs,
// shallow piecewise-linear bumps for boundary arcs), and two arcs cross
// iff they share no endpoint and their curves meet an odd number of times.
// Every incidence must be transversal; a degenerate contact throws
// InternalInvariantError instead of guessing.
bool geom_crossing_oracle(const ArcOrEdge& u, const ArcOrEdge& v);

// Whether v crosses no member of t, decided by intersecting t's regions
// with directly-constructed crosser intervals for v (no case tables).
// v must be an arc.
bool member_nc_oracle(const ArcSet& t, const ArcOrEdge& v);

// Plain-loop predicates over explicit arc lists.
bool brute_noncrossing(const std::vector<ArcOrEdge>& arcs);
bool brute_is_ptolemy(const std::vector<ArcOrEdge>& arcs);

// Whether every member of omega is served by some member of sigma: sigma's
// element must cross the shifted target, and if it also crosses the target
// itself, both middle sides of that crossing must again lie in omega (or
// be boundary edges).
bool brute_tau_basis(const std::vector<ArcOrEdge>& sigma,
                     const std::vector<ArcOrEdge>& omega);

}  // namespace arcstrip
