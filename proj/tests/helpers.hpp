#ifndef CIRCUM_TEST_HELPERS_HPP
#define CIRCUM_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "graph.hpp"

namespace circum::testutil {

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline Graph permuted(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j : bits(g.neighbors(i)))
            if (j > i) h.add_edge(perm[i], perm[j]);
    return h;
}

// longest cycle length by plain DFS over simple paths; independent of the
// bitmask engines
inline int naive_circumference(const Graph& g) {
    int n = g.order();
    int best = 2;
    std::vector<int> stack;
    std::vector<bool> used(n, false);
    auto dfs = [&](auto&& self, int cur, int root) -> void {
        if ((int)stack.size() >= 3 && g.has_edge(cur, root))
            best = std::max(best, (int)stack.size());
        for (int v : bits(g.neighbors(cur))) {
            if (v <= root || used[v]) continue;
            used[v] = true;
            stack.push_back(v);
            self(self, v, root);
            stack.pop_back();
            used[v] = false;
        }
    };
    for (int r = 0; r < n; ++r) {
        used[r] = true;
        stack = {r};
        dfs(dfs, r, r);
        used[r] = false;
    }
    return best;
}

// longest x-y path edge count, -1 if disconnected; plain DFS
inline int naive_longest_path(const Graph& g, int x, int y) {
    int best = -1;
    std::vector<bool> used(g.order(), false);
    auto dfs = [&](auto&& self, int cur, int len) -> void {
        if (cur == y) {
            best = std::max(best, len);
            return;
        }
        for (int v : bits(g.neighbors(cur))) {
            if (used[v]) continue;
            used[v] = true;
            self(self, v, len + 1);
            used[v] = false;
        }
    };
    used[x] = true;
    dfs(dfs, x, 0);
    return best;
}

// every labeled graph on n vertices, one call per adjacency bitmap
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Graph g(n);
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++b)
                if (mask & (std::uint64_t{1} << b)) g.add_edge(i, j);
        fn(g);
    }
}

}  // namespace circum::testutil

#endif
