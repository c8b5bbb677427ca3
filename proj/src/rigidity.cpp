#include "rigidcount/rigidity.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "rigidcount/pebble.hpp"

namespace rigidcount {

bool is_rigid(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1)
        return true;
    if (n == 2)
        return g.edge_count() == 1;
    return generic_rank(g) == 2 * n - 3;
}

bool is_isostatic(const Graph& g) {
    return is_rigid(g) && g.edge_count() == 2 * g.vertex_count() - 3;
}

bool is_redundantly_rigid(const Graph& g) {
    if (!is_rigid(g))
        return false;
    for (auto [u, v] : g.edges())
        if (!is_rigid(g.without_edge(u, v)))
            return false;
    return true;
}

bool is_globally_rigid(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 3) {
        // A complete graph on at most three vertices has one congruence class.
        return g.edge_count() == n * (n - 1) / 2;
    }
    return is_k_connected(g, 3) && is_redundantly_rigid(g);
}

namespace {

// uv lies in the closure of E(g): either an edge, or adding it does not
// raise the generic rank.
std::vector<std::vector<char>> closure_pairs(const Graph& g, int rank) {
    int n = g.vertex_count();
    std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool in_closure;
            if (g.has_edge(u, v)) {
                in_closure = true;
            } else {
                auto edges = g.edges();
                edges.emplace_back(u, v);
                in_closure = pebble_rank(n, edges) == rank;
            }
            linked[u][v] = linked[v][u] = in_closure;
        }
    }
    return linked;
}

} // namespace

std::vector<std::vector<int>> rigid_components(const Graph& g) {
    // The closure of E is an edge-disjoint union of cliques whose vertex
    // sets are exactly the rigid components; two components share at most
    // one vertex, so the clique through an edge uv is {u,v} plus the common
    // linked neighbourhood of u and v.
    int n = g.vertex_count();
    auto linked = closure_pairs(g, generic_rank(g));
    std::vector<std::vector<int>> comps;
    std::vector<char> edge_done(g.edge_count(), 0);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        if (edge_done[ei])
            continue;
        auto [u, v] = g.edges()[ei];
        std::vector<int> comp{u, v};
        for (int w = 0; w < n; ++w)
            if (w != u && w != v && linked[u][w] && linked[v][w])
                comp.push_back(w);
        std::sort(comp.begin(), comp.end());
        std::vector<char> in_comp(n, 0);
        for (int w : comp)
            in_comp[w] = 1;
        for (int ej = 0; ej < g.edge_count(); ++ej) {
            auto [a, b] = g.edges()[ej];
            if (in_comp[a] && in_comp[b])
                edge_done[ej] = 1;
        }
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

std::vector<Edge> spanning_isostatic_subgraph(const Graph& g) {
    if (!is_rigid(g))
        throw NotRigidError("graph is not rigid; no spanning isostatic subgraph");
    if (g.vertex_count() <= 2)
        return g.edges();
    return pebble_basis(g);
}

MatroidComponents r_components(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    const auto& edges = g.edges();
    auto basis = pebble_basis(g);
    std::vector<char> in_basis(m, 0);
    for (const auto& e : basis)
        in_basis[g.edge_index(e.first, e.second)] = 1;

    // union-find over edge indices
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    std::vector<char> in_circuit(m, 0);
    for (int ei = 0; ei < m; ++ei) {
        if (in_basis[ei])
            continue;
        // Fundamental circuit of edges[ei] with respect to the basis:
        // {e} plus every basis edge whose swap with e stays independent.
        in_circuit[ei] = 1;
        for (size_t bi = 0; bi < basis.size(); ++bi) {
            std::vector<Edge> swapped;
            swapped.reserve(basis.size());
            for (size_t bj = 0; bj < basis.size(); ++bj)
                if (bj != bi)
                    swapped.push_back(basis[bj]);
            swapped.push_back(edges[ei]);
            if (is_independent(n, swapped)) {
                int bidx = g.edge_index(basis[bi].first, basis[bi].second);
                in_circuit[bidx] = 1;
                unite(ei, bidx);
            }
        }
    }

    std::vector<std::vector<Edge>> grouped(m);
    for (int ei = 0; ei < m; ++ei)
        grouped[in_circuit[ei] ? find(ei) : ei].push_back(edges[ei]);

    MatroidComponents out;
    for (int ei = 0; ei < m; ++ei) {
        if (grouped[ei].empty())
            continue;
        std::sort(grouped[ei].begin(), grouped[ei].end());
        out.blocks.push_back(std::move(grouped[ei]));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (const auto& block : out.blocks) {
        int idx = g.edge_index(block[0].first, block[0].second);
        out.is_single_edge.push_back(block.size() == 1 && !in_circuit[idx]);
    }
    return out;
}

int b_value(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3)
        throw ArgumentError("b_value needs at least three vertices");
    if (!is_connected(g))
        throw ArgumentError("b_value needs a connected graph");
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int w = static_cast<int>(components_without(g, {u, v}).size());
            if (w >= 2)
                b += w - 1;
        }
    return b;
}

bool is_globally_linked_mconnected(const Graph& g, int u, int v) {
    if (u == v)
        throw ArgumentError("u and v must be distinct");
    if (!r_components(g).r_connected(g.edge_count()))
        throw UnsupportedInputError("graph is not R-connected");
    return three_internally_disjoint_paths(g, u, v);
}

RigidityReport analyze(const Graph& g) {
    RigidityReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.generic_rank = generic_rank(g);
    r.is_rigid = is_rigid(g);
    r.is_isostatic = r.is_rigid && r.m == 2 * r.n - 3;
    r.is_redundantly_rigid = is_redundantly_rigid(g);
    r.is_3_connected = is_k_connected(g, 3);
    r.is_globally_rigid = is_globally_rigid(g);
    r.rigid_components = rigid_components(g);
    auto mc = r_components(g);
    r.is_r_connected = mc.r_connected(r.m);
    r.r_components = mc.blocks;
    r.b_value = (r.n >= 3 && is_connected(g)) ? b_value(g) : 0;
    return r;
}

std::string report_to_json(const RigidityReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["generic_rank"] = r.generic_rank;
    j["is_rigid"] = r.is_rigid;
    j["is_isostatic"] = r.is_isostatic;
    j["is_redundantly_rigid"] = r.is_redundantly_rigid;
    j["is_3_connected"] = r.is_3_connected;
    j["is_globally_rigid"] = r.is_globally_rigid;
    j["is_r_connected"] = r.is_r_connected;
    j["rigid_components"] = r.rigid_components;
    auto blocks = nlohmann::json::array();
    for (const auto& block : r.r_components) {
        auto b = nlohmann::json::array();
        for (auto [u, v] : block)
            b.push_back({u, v});
        blocks.push_back(b);
    }
    j["r_components"] = blocks;
    j["b_value"] = r.b_value;
    return j.dump();
}

RigidityReport report_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    RigidityReport r;
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.generic_rank = j.at("generic_rank").get<int>();
    r.is_rigid = j.at("is_rigid").get<bool>();
    r.is_isostatic = j.at("is_isostatic").get<bool>();
    r.is_redundantly_rigid = j.at("is_redundantly_rigid").get<bool>();
    r.is_3_connected = j.at("is_3_connected").get<bool>();
    r.is_globally_rigid = j.at("is_globally_rigid").get<bool>();
    r.is_r_connected = j.at("is_r_connected").get<bool>();
    r.rigid_components = j.at("rigid_components").get<std::vector<std::vector<int>>>();
    for (const auto& block : j.at("r_components")) {
        std::vector<Edge> b;
        for (const auto& e : block)
            b.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        r.r_components.push_back(std::move(b));
    }
    r.b_value = j.at("b_value").get<int>();
    return r;
}

} // namespace rigidcount
