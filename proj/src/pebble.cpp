#include "rigidcount/pebble.hpp"

#include <algorithm>
#include <numeric>

namespace rigidcount {

PebbleGame::PebbleGame(int n) : n_(n), pebbles_(n, 2), out_(n) {}

int PebbleGame::total_pebbles() const {
    return std::accumulate(pebbles_.begin(), pebbles_.end(), 0);
}

// DFS from src for a vertex holding a free pebble; src and other are not
// pebble donors.  On success the path is reversed and the pebble lands on
// src.  Successor lists are sorted, so the walk is lowest-label-first.
bool PebbleGame::gather(int src, int other) {
    std::vector<int> parent(n_, -2);
    parent[src] = -1;
    parent[other] = -3; // visited, never expanded
    auto dfs = [&](auto&& self, int v) -> int {
        for (int w : out_[v]) {
            if (parent[w] != -2)
                continue;
            parent[w] = v;
            if (pebbles_[w] > 0)
                return w;
            if (int found = self(self, w); found >= 0)
                return found;
        }
        return -1;
    };
    int found = dfs(dfs, src);
    if (found < 0)
        return false;
    // Reverse the arcs along src -> ... -> found.
    for (int cur = found; parent[cur] >= 0;) {
        int p = parent[cur];
        out_[p].erase(std::find(out_[p].begin(), out_[p].end(), cur));
        out_[cur].insert(std::lower_bound(out_[cur].begin(), out_[cur].end(), p), p);
        cur = p;
    }
    --pebbles_[found];
    ++pebbles_[src];
    return true;
}

bool PebbleGame::insert(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
        if (!gather(u, v) && !gather(v, u))
            return false;
    }
    --pebbles_[u];
    out_[u].insert(std::lower_bound(out_[u].begin(), out_[u].end(), v), v);
    ++accepted_count_;
    return true;
}

int pebble_rank(int n, const std::vector<Edge>& edges) {
    PebbleGame game(n);
    for (auto [u, v] : edges)
        game.insert(u, v);
    return game.accepted_count();
}

int generic_rank(const Graph& g) { return pebble_rank(g.vertex_count(), g.edges()); }

bool is_independent(int n, const std::vector<Edge>& edges) {
    return pebble_rank(n, edges) == static_cast<int>(edges.size());
}

std::vector<Edge> pebble_basis(const Graph& g) {
    PebbleGame game(g.vertex_count());
    std::vector<Edge> basis;
    for (auto [u, v] : g.edges())
        if (game.insert(u, v))
            basis.emplace_back(u, v);
    return basis;
}

} // namespace rigidcount
