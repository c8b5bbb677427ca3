#pragma once

#include <cstdint>
#include <string>

#include "rigidcount/graph.hpp"

namespace rigidcount {

// Isomorphism-invariant fingerprint from iterated neighbourhood-color
// refinement.  Equal graphs up to relabeling always collide; unequal graphs
// collide only rarely, and callers resolve those with are_isomorphic().
std::uint64_t graph_fingerprint(const Graph& g);

std::string fingerprint_hex(const Graph& g);

// Exact isomorphism test (color-refinement pruned backtracking); intended
// for the small graphs this project handles.
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace rigidcount
