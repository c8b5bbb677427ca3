#include "rigidcount/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace rigidcount {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0)
        throw ArgumentError("vertex count must be non-negative");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (u < 0 || v >= n)
            throw ParseError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ParseError("duplicate edge");
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& lst : adj_)
        std::sort(lst.begin(), lst.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw ArgumentError("vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it != edges_.end() && *it == Edge{u, v})
        return static_cast<int>(it - edges_.begin());
    return -1;
}

Graph Graph::with_edge(int u, int v) const {
    if (has_edge(u, v))
        return *this;
    auto es = edges_;
    es.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(n_, std::move(es));
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const auto& e : edges_)
        if (e != Edge{u, v})
            es.push_back(e);
    return Graph(n_, std::move(es));
}

Graph Graph::without_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ArgumentError("vertex out of range");
    std::vector<Edge> es;
    for (auto [a, b] : edges_) {
        if (a == v || b == v)
            continue;
        es.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(n_ - 1, std::move(es));
}

Graph Graph::induced(const std::vector<int>& verts) const {
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> pos(n_, -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= n_)
            throw ArgumentError("vertex out of range in induced()");
        pos[sorted[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (auto [a, b] : edges_)
        if (pos[a] >= 0 && pos[b] >= 0)
            es.emplace_back(pos[a], pos[b]);
    return Graph(static_cast<int>(sorted.size()), std::move(es));
}

namespace {

Graph parse_format_a(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("expected header \"n m\"", lineno);
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw ParseError("expected edge \"u v\"", lineno);
        std::string rest;
        if (ls >> rest && rest[0] != '#')
            throw ParseError("trailing junk after edge", lineno);
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex label out of range 0.." + std::to_string(n - 1), lineno);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (n < 0)
        throw ParseError("empty input");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    auto check = edges;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        throw ParseError("duplicate edge");
    return Graph(n, std::move(edges));
}

Graph parse_format_b(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("JSON graph needs fields \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair [u, v]");
        int u = e.at(0).get<int>();
        int v = e.at(1).get<int>();
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex label out of range 0.." + std::to_string(n - 1));
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    auto check = edges;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
        throw ParseError("duplicate edge");
    return Graph(n, std::move(edges));
}

} // namespace

Graph parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return c == '{' ? parse_format_b(text) : parse_format_a(text);
    }
    throw ParseError("empty input");
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = edges;
    return j.dump();
}

std::vector<std::vector<int>> components_without(const Graph& g,
                                                 const std::vector<int>& removed) {
    int n = g.vertex_count();
    std::vector<char> gone(n, 0), seen(n, 0);
    for (int v : removed) {
        if (v < 0 || v >= n)
            throw ArgumentError("vertex out of range");
        gone[v] = 1;
    }
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (gone[s] || seen[s])
            continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1)
        return true;
    return components_without(g, {}).size() == 1;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1)
        throw ArgumentError("k must be >= 1");
    int n = g.vertex_count();
    if (n <= k)
        return false;
    // Brute force over all separator candidates of size < k; the graphs in
    // this pipeline are small enough that this beats a flow formulation.
    std::vector<int> sep;
    auto disconnects = [&](auto&& self, int next, int remaining) -> bool {
        if (remaining == 0)
            return components_without(g, sep).size() != 1;
        for (int v = next; v < n; ++v) {
            sep.push_back(v);
            if (self(self, v + 1, remaining - 1))
                return true;
            sep.pop_back();
        }
        return false;
    };
    for (int size = 0; size < k; ++size)
        if (disconnects(disconnects, 0, size))
            return false;
    return true;
}

std::vector<Separation> find_2_separations(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Separation> result;
    if (n < 4)
        return result;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            auto comps = components_without(g, {u, v});
            if (comps.size() < 2)
                continue;
            Separation s;
            s.separator = {u, v};
            s.side_a = comps[0];
            for (size_t i = 1; i < comps.size(); ++i)
                s.side_b.insert(s.side_b.end(), comps[i].begin(), comps[i].end());
            s.side_a.push_back(u);
            s.side_a.push_back(v);
            s.side_b.push_back(u);
            s.side_b.push_back(v);
            std::sort(s.side_a.begin(), s.side_a.end());
            std::sort(s.side_b.begin(), s.side_b.end());
            result.push_back(std::move(s));
        }
    }
    return result;
}

std::vector<EdgeCut3> find_3_edge_cuts_disjoint(const Graph& g) {
    const auto& edges = g.edges();
    int m = g.edge_count();
    int n = g.vertex_count();
    std::vector<EdgeCut3> result;
    if (n < 6)
        return result;
    std::vector<int> comp_id(n);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                // Components of g minus the three candidate edges.
                std::fill(comp_id.begin(), comp_id.end(), -1);
                int ncomp = 0;
                for (int s = 0; s < n; ++s) {
                    if (comp_id[s] >= 0)
                        continue;
                    std::vector<int> stack{s};
                    comp_id[s] = ncomp;
                    while (!stack.empty()) {
                        int v = stack.back();
                        stack.pop_back();
                        for (int w : g.neighbors(v)) {
                            int ei = g.edge_index(v, w);
                            if (ei == i || ei == j || ei == k)
                                continue;
                            if (comp_id[w] < 0) {
                                comp_id[w] = ncomp;
                                stack.push_back(w);
                            }
                        }
                    }
                    ++ncomp;
                }
                if (ncomp != 2)
                    continue;
                // All three removed edges must cross between the two parts.
                bool crossing = true;
                for (int ei : {i, j, k}) {
                    auto [a, b] = edges[ei];
                    if (comp_id[a] == comp_id[b])
                        crossing = false;
                }
                if (!crossing)
                    continue;
                EdgeCut3 cut;
                int side0 = comp_id[0];
                for (int v = 0; v < n; ++v)
                    (comp_id[v] == side0 ? cut.part_a : cut.part_b).push_back(v);
                if (cut.part_a.size() < 3 || cut.part_b.size() < 3)
                    continue;
                std::vector<int> ends_a, ends_b;
                for (int ei : {i, j, k}) {
                    auto [a, b] = edges[ei];
                    if (comp_id[a] != side0)
                        std::swap(a, b);
                    ends_a.push_back(a);
                    ends_b.push_back(b);
                    cut.cut_edges.push_back(edges[ei]);
                }
                std::sort(ends_a.begin(), ends_a.end());
                std::sort(ends_b.begin(), ends_b.end());
                if (std::adjacent_find(ends_a.begin(), ends_a.end()) != ends_a.end())
                    continue;
                if (std::adjacent_find(ends_b.begin(), ends_b.end()) != ends_b.end())
                    continue;
                result.push_back(std::move(cut));
            }
        }
    }
    return result;
}

namespace {

// Unit-capacity max-flow on the vertex-split network, stopping at `limit`.
class SplitFlow {
public:
    SplitFlow(const Graph& g, int u, int v) : u_(u), v_(v) {
        int n = g.vertex_count();
        // node 2w = w_in, 2w+1 = w_out
        adj_.resize(2 * n);
        for (int w = 0; w < n; ++w) {
            int c = (w == u || w == v) ? big_ : 1;
            add_arc(2 * w, 2 * w + 1, c);
        }
        for (auto [a, b] : g.edges()) {
            add_arc(2 * a + 1, 2 * b, 1);
            add_arc(2 * b + 1, 2 * a, 1);
        }
    }

    int max_flow(int limit) {
        int src = 2 * u_ + 1, dst = 2 * v_;
        int flow = 0;
        while (flow < limit && augment(src, dst))
            ++flow;
        return flow;
    }

private:
    struct Arc {
        int to;
        int cap;
        int rev;
    };

    void add_arc(int a, int b, int c) {
        adj_[a].push_back({b, c, static_cast<int>(adj_[b].size())});
        adj_[b].push_back({a, 0, static_cast<int>(adj_[a].size()) - 1});
    }

    bool augment(int src, int dst) {
        std::vector<std::pair<int, int>> pred(adj_.size(), {-1, -1});
        std::queue<int> q;
        q.push(src);
        pred[src] = {src, -1};
        while (!q.empty() && pred[dst].first < 0) {
            int v = q.front();
            q.pop();
            for (size_t i = 0; i < adj_[v].size(); ++i) {
                const Arc& a = adj_[v][i];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {v, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (pred[dst].first < 0)
            return false;
        for (int v = dst; v != src;) {
            auto [p, i] = pred[v];
            Arc& a = adj_[p][i];
            a.cap -= 1;
            adj_[v][a.rev].cap += 1;
            v = p;
        }
        return true;
    }

    static constexpr int big_ = 1 << 20;
    int u_, v_;
    std::vector<std::vector<Arc>> adj_;
};

} // namespace

bool three_internally_disjoint_paths(const Graph& g, int u, int v) {
    if (u == v)
        throw ArgumentError("u and v must be distinct");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw ArgumentError("vertex out of range");
    SplitFlow flow(g, u, v);
    return flow.max_flow(3) >= 3;
}

} // namespace rigidcount
