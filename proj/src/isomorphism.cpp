#include "rigidcount/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rigidcount {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
}

// Stable colors after iterated refinement: color(v) <- hash(color(v),
// sorted neighbor colors).  Runs n rounds, enough to stabilize.  Seeding
// with per-edge common-neighbor counts separates regular graphs (prism vs
// K3,3) that plain degree refinement cannot.
std::vector<std::uint64_t> refined_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint64_t> common;
        for (int w : g.neighbors(v)) {
            std::uint64_t shared = 0;
            for (int x : g.neighbors(v))
                if (x != w && g.has_edge(w, x))
                    ++shared;
            common.push_back(shared);
        }
        std::sort(common.begin(), common.end());
        std::uint64_t h = mix(0x13198A2E03707344ULL, static_cast<std::uint64_t>(g.degree(v)));
        for (auto c : common)
            h = mix(h, c);
        color[v] = h;
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            nb.reserve(g.degree(v));
            for (int w : g.neighbors(v))
                nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = mix(0x243F6A8885A308D3ULL, color[v]);
            for (auto c : nb)
                h = mix(h, c);
            next[v] = h;
        }
        color = std::move(next);
    }
    return color;
}

} // namespace

std::uint64_t graph_fingerprint(const Graph& g) {
    auto color = refined_colors(g);
    std::vector<std::uint64_t> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t h = mix(0x452821E638D01377ULL, static_cast<std::uint64_t>(g.vertex_count()));
    h = mix(h, static_cast<std::uint64_t>(g.edge_count()));
    for (auto c : sorted)
        h = mix(h, c);
    std::vector<std::uint64_t> edge_hashes;
    edge_hashes.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        edge_hashes.push_back(mix(std::min(color[u], color[v]), std::max(color[u], color[v])));
    std::sort(edge_hashes.begin(), edge_hashes.end());
    for (auto e : edge_hashes)
        h = mix(h, e);
    return h;
}

std::string fingerprint_hex(const Graph& g) {
    std::ostringstream out;
    out << std::hex << graph_fingerprint(g);
    return out.str();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    int n = a.vertex_count();
    if (n == 0)
        return true;

    auto ca = refined_colors(a);
    auto cb = refined_colors(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }

    // Map a-vertices in order of rarest color first; candidates must match
    // colors and adjacency to everything already mapped.
    std::map<std::uint64_t, int> freq;
    for (auto c : ca)
        ++freq[c];
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (freq[ca[x]] != freq[ca[y]])
            return freq[ca[x]] < freq[ca[y]];
        return x < y;
    });

    std::vector<int> image(n, -1), used(n, 0);
    auto backtrack = [&](auto&& self, int idx) -> bool {
        if (idx == n)
            return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || cb[w] != ca[v])
                continue;
            bool ok = true;
            for (int prev = 0; prev < idx && ok; ++prev) {
                int pv = order[prev];
                if (a.has_edge(v, pv) != b.has_edge(w, image[pv]))
                    ok = false;
            }
            if (!ok)
                continue;
            image[v] = w;
            used[w] = 1;
            if (self(self, idx + 1))
                return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

} // namespace rigidcount
