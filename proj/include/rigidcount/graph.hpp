#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rigidcount/errors.hpp"

namespace rigidcount {

using Edge = std::pair<int, int>; // normalized u < v

// Undirected simple graph on dense labels 0..n-1.  Edge iteration order is
// always sorted, which keeps every downstream computation deterministic.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    // Index of edge {u,v} in the sorted edge list, or -1.
    int edge_index(int u, int v) const;

    Graph with_edge(int u, int v) const;           // no-op if already present
    Graph without_edge(int u, int v) const;
    Graph without_vertex(int v) const;             // labels above v shift down
    // Induced subgraph on `verts`; vertices are relabeled 0..k-1 in the
    // sorted order of `verts`.
    Graph induced(const std::vector<int>& verts) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;             // sorted, each (u,v) with u < v
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

// One 2-separation: both sides include the separator, no edge crosses
// between side_a minus the separator and side_b minus the separator.
struct Separation {
    std::vector<int> side_a;
    std::vector<int> side_b;
    std::vector<int> separator;
};

// A nontrivial 3-edge-cut between two vertex-disjoint induced parts.  The
// three cut edges have pairwise distinct endpoints on each side.
struct EdgeCut3 {
    std::vector<int> part_a;
    std::vector<int> part_b;
    std::vector<Edge> cut_edges;
};

// Accepts format A (edge list: "n m" header, then "u v" lines, '#' comments)
// or format B (JSON {"n": int, "edges": [[u,v],...]}), auto-detected.
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string graph_to_json(const Graph& g);

bool is_connected(const Graph& g);
// Connected components of g with the vertices in `removed` deleted.
std::vector<std::vector<int>> components_without(const Graph& g,
                                                 const std::vector<int>& removed);

// True iff g has more than k vertices and no vertex set of size < k
// disconnects it.  (K_{k+1} counts as k-connected.)
bool is_k_connected(const Graph& g, int k);

// One Separation per 2-separator pair {u,v}; side_a holds the
// lexicographically smallest component of g - {u,v} together with the
// separator.  Empty iff g is 3-connected or too small.
std::vector<Separation> find_2_separations(const Graph& g);

// All ways to split g into two vertex-disjoint induced parts of size >= 3
// joined by exactly three edges with distinct endpoints on each side.
std::vector<EdgeCut3> find_3_edge_cuts_disjoint(const Graph& g);

// Local vertex connectivity >= 3, via max-flow on a vertex-split network.
// An edge uv counts as one path.
bool three_internally_disjoint_paths(const Graph& g, int u, int v);

} // namespace rigidcount
