#pragma once

#include <vector>

#include "rigidcount/graph.hpp"

namespace rigidcount {

// The (2,3)-pebble game.  Every vertex starts with two pebbles; an edge uv
// is accepted when four pebbles can be gathered onto {u,v}, after which the
// edge is oriented away from u and costs u one pebble.  Accepted edges form
// a maximal independent set of the generic 2D rigidity matroid, so the
// number of accepted edges is the generic rank.
//
// Determinism: edges are offered in sorted order and pebble searches run
// lowest-label-first, so the accepted basis is reproducible.
class PebbleGame {
public:
    explicit PebbleGame(int n);

    // Try to accept edge (u,v); returns false when the edge is dependent
    // on the edges accepted so far.
    bool insert(int u, int v);

    int accepted_count() const { return accepted_count_; }
    int pebbles_on(int v) const { return pebbles_[v]; }
    int total_pebbles() const;

private:
    bool gather(int src, int other);

    int n_;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_; // sorted successor lists
    int accepted_count_ = 0;
};

// Rank of an explicit edge list over n vertices (edges inserted as given).
int pebble_rank(int n, const std::vector<Edge>& edges);

// Generic rank of the rigidity matroid of g.
int generic_rank(const Graph& g);

// Independence of an edge set in the generic rigidity matroid.
bool is_independent(int n, const std::vector<Edge>& edges);

// Edges of g accepted by the pebble game in sorted order; a basis of the
// rigidity matroid of g.
std::vector<Edge> pebble_basis(const Graph& g);

} // namespace rigidcount
