#pragma once

#include <string>
#include <vector>

#include "rigidcount/graph.hpp"

namespace rigidcount {

// Partition of the edge set into components of the rigidity matroid.
// A block is trivial when it is a single edge lying on no circuit.
struct MatroidComponents {
    std::vector<std::vector<Edge>> blocks; // each sorted; blocks sorted by first edge
    std::vector<bool> is_single_edge;

    bool r_connected(int total_edges) const {
        return total_edges >= 2 && blocks.size() == 1 && !is_single_edge[0];
    }
};

struct RigidityReport {
    int n = 0;
    int m = 0;
    int generic_rank = 0;
    bool is_rigid = false;
    bool is_isostatic = false;
    bool is_redundantly_rigid = false;
    bool is_3_connected = false;
    bool is_globally_rigid = false;
    bool is_r_connected = false;
    std::vector<std::vector<int>> rigid_components;
    std::vector<std::vector<Edge>> r_components;
    int b_value = 0;
};

bool is_rigid(const Graph& g);
bool is_isostatic(const Graph& g);
bool is_redundantly_rigid(const Graph& g);

// For n >= 4: 3-connected and redundantly rigid.  K2 and K3 count as
// globally rigid even though the per-edge redundancy test fails on them.
bool is_globally_rigid(const Graph& g);

// Vertex sets of the maximal rigid subgraphs.  Their edge sets partition E
// and generic_rank(g) equals the sum of 2|V(H)|-3 over them.
std::vector<std::vector<int>> rigid_components(const Graph& g);

// The 2n-3 edges accepted by the pebble game on the sorted edge list.
// Throws NotRigidError when g is flexible.
std::vector<Edge> spanning_isostatic_subgraph(const Graph& g);

// Matroid components via fundamental circuits of a fixed pebble-game basis,
// glued by union-find.
MatroidComponents r_components(const Graph& g);

// Sum over vertex pairs {u,v} of (number of components of g-{u,v}) - 1,
// restricted to pairs that actually separate.  Requires g connected, n >= 3.
int b_value(const Graph& g);

// Decides global linkedness of {u,v} under the hypothesis that g is
// R-connected; throws UnsupportedInputError otherwise.
bool is_globally_linked_mconnected(const Graph& g, int u, int v);

RigidityReport analyze(const Graph& g);
std::string report_to_json(const RigidityReport& r);
RigidityReport report_from_json(const std::string& text);

} // namespace rigidcount
