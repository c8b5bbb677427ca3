#pragma once

// Shared builders and independent brute-force oracles for the test suites.
// Oracles here must never call the implementation path they are checking.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "rigidcount/graph.hpp"
#include "rigidcount/pebble.hpp"
#include "rigidcount/realization.hpp"

namespace testsupport {

using rigidcount::Complex;
using rigidcount::Edge;
using rigidcount::Graph;

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph complete(int k) {
    std::vector<Edge> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            edges.emplace_back(u, v);
    return Graph(k, std::move(edges));
}

inline Graph cycle(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        edges.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
    return Graph(k, std::move(edges));
}

inline Graph path(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(k, std::move(edges));
}

// Two disjoint triangles {0,1,2}, {3,4,5} joined by the matching 03,14,25.
inline Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Rim 0..k-1 plus hub k.
inline Graph wheel(int k) {
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
        edges.emplace_back(i, k);
    }
    return Graph(k + 1, std::move(edges));
}

inline Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Two K4's sharing the non-adjacent pair {0,1}; the classic R-circuit with
// b = 1.
inline Graph double_k4() {
    return Graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                     {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

// Triangle plus k degree-2 vertex additions, each new vertex joined to the
// previous two.
inline Graph henneberg1_chain(int k) {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    for (int i = 0; i < k; ++i) {
        int v = 3 + i;
        edges.emplace_back(v - 2, v);
        edges.emplace_back(v - 1, v);
    }
    return Graph(3 + k, std::move(edges));
}

// Glue g2 - u2v2 onto g1 identifying u2 with u1 and v2 with v1.  The edge
// u2v2 must exist in g2.  Grown from triangles this produces the
// quadratically-solvable family with c = 2^{n-3}.
inline Graph qs_glue(const Graph& g1, int u1, int v1, const Graph& g2, int u2, int v2) {
    if (!g2.has_edge(u2, v2))
        throw rigidcount::ArgumentError("qs_glue: u2v2 must be an edge of g2");
    int n1 = g1.vertex_count();
    std::vector<int> map2(g2.vertex_count());
    int next = n1;
    for (int w = 0; w < g2.vertex_count(); ++w) {
        if (w == u2)
            map2[w] = u1;
        else if (w == v2)
            map2[w] = v1;
        else
            map2[w] = next++;
    }
    std::vector<Edge> edges = g1.edges();
    for (auto [a, b] : g2.edges()) {
        if (Edge{std::min(a, b), std::max(a, b)} == Edge{std::min(u2, v2), std::max(u2, v2)})
            continue;
        int ma = map2[a], mb = map2[b];
        edges.emplace_back(std::min(ma, mb), std::max(ma, mb));
    }
    return Graph(next, std::move(edges));
}

// Prism + triangle joined by a 3-edge matching (n = 9, c = 144).
inline Graph prism_triangle_tower() {
    auto g = prism().edges();
    g.insert(g.end(), {{6, 7}, {7, 8}, {6, 8}, {3, 6}, {4, 7}, {5, 8}});
    return Graph(9, std::move(g));
}

// Two prisms joined triangle-to-triangle by a matching (n = 12, c = 1728).
inline Graph double_prism() {
    Graph p = prism();
    std::vector<Edge> edges = p.edges();
    for (auto [u, v] : p.edges())
        edges.emplace_back(u + 6, v + 6);
    edges.insert(edges.end(), {{3, 6}, {4, 7}, {5, 8}});
    return Graph(12, std::move(edges));
}

// A prism whose matching edge {0,1} is replaced by a K4-minus-edge block on
// {0,1,2,3}: rigid, isostatic, no degree-2 vertex, and its only reduction is
// the 2-separation at {0,1} with one flexible side.  c = 2 * 2 * 12 = 48.
inline Graph prism_with_banana() {
    return Graph(8, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},           // K4 - 01
                     {0, 4}, {0, 5}, {4, 5},                           // triangle 0,4,5
                     {1, 6}, {1, 7}, {6, 7},                           // triangle 1,6,7
                     {4, 6}, {5, 7}});                                 // matching
}

// --- deterministic random graphs -------------------------------------------

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 0x9E3779B97F4A7C15ULL + 1) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline Graph random_graph(int n, int m, Rng& rng) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.emplace_back(u, v);
    for (size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[static_cast<size_t>(rng.below(static_cast<int>(i)))]);
    all.resize(std::min<size_t>(m, all.size()));
    return Graph(n, std::move(all));
}

// --- brute-force oracles ----------------------------------------------------

// Matroid components by full circuit enumeration over edge subsets, checking
// independence of each subset directly with the rank function.
inline std::vector<std::vector<Edge>> brute_force_matroid_components(const Graph& g) {
    int m = g.edge_count();
    const auto& edges = g.edges();
    auto dependent = [&](std::uint32_t mask) {
        std::vector<Edge> sub;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1)
                sub.push_back(edges[i]);
        return rigidcount::pebble_rank(g.vertex_count(), sub) <
               static_cast<int>(sub.size());
    };

    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<char> in_circuit(m, 0);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        if (!dependent(mask))
            continue;
        bool minimal = true;
        for (int i = 0; i < m && minimal; ++i)
            if ((mask >> i & 1) && dependent(mask & ~(1u << i)))
                minimal = false;
        if (!minimal)
            continue;
        int first = -1;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1))
                continue;
            in_circuit[i] = 1;
            if (first < 0)
                first = i;
            else
                parent[find(i)] = find(first);
        }
    }

    std::vector<std::vector<Edge>> blocks(m);
    for (int i = 0; i < m; ++i)
        blocks[in_circuit[i] ? find(i) : i].push_back(edges[i]);
    std::vector<std::vector<Edge>> out;
    for (auto& b : blocks)
        if (!b.empty()) {
            std::sort(b.begin(), b.end());
            out.push_back(std::move(b));
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Closed-form solution set of the pinned triangle system
//   y1^2 = l01,  x2^2 + y2^2 = l02,  x2^2 + (y2-y1)^2 = l12
// via quadratic elimination; returns all four (y1, x2, y2).
inline std::vector<Eigen::VectorXcd> k3_solutions(Complex l01, Complex l12, Complex l02) {
    std::vector<Eigen::VectorXcd> out;
    Complex root01 = std::sqrt(l01);
    for (Complex y1 : {root01, -root01}) {
        Complex y2 = (l02 - l12 + y1 * y1) / (2.0 * y1);
        Complex x2sq = l02 - y2 * y2;
        Complex x2 = std::sqrt(x2sq);
        for (Complex x : {x2, -x2}) {
            Eigen::VectorXcd z(3);
            z << y1, x, y2;
            out.push_back(z);
        }
    }
    return out;
}

// Same elimination for K4 minus the edge {2,3} (edges 01,02,03,12,13):
// vertices 2 and 3 are independent triangle completions over the pinned
// edge, giving eight solutions (y1, x2, y2, x3, y3).
inline std::vector<Eigen::VectorXcd> k4_minus_edge_solutions(Complex l01, Complex l02,
                                                             Complex l03, Complex l12,
                                                             Complex l13) {
    std::vector<Eigen::VectorXcd> out;
    Complex root01 = std::sqrt(l01);
    for (Complex y1 : {root01, -root01}) {
        Complex y2 = (l02 - l12 + y1 * y1) / (2.0 * y1);
        Complex x2 = std::sqrt(l02 - y2 * y2);
        Complex y3 = (l03 - l13 + y1 * y1) / (2.0 * y1);
        Complex x3 = std::sqrt(l03 - y3 * y3);
        for (Complex sx2 : {x2, -x2})
            for (Complex sx3 : {x3, -x3}) {
                Eigen::VectorXcd z(5);
                z << y1, sx2, y2, sx3, y3;
                out.push_back(z);
            }
    }
    return out;
}

// Smallest max-norm distance from z to any element of set.
inline double nearest_distance(const Eigen::VectorXcd& z,
                               const std::vector<Eigen::VectorXcd>& set) {
    double best = 1e300;
    for (const auto& w : set)
        best = std::min(best, (z - w).lpNorm<Eigen::Infinity>());
    return best;
}

} // namespace testsupport
