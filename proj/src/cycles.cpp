#include "cycles.hpp"

#include <algorithm>

namespace circum {

namespace {

constexpr int kDpLimit = 20;  // subset DP above this falls back to branch & bound

VertexSet reach_from(const Graph& g, VertexSet seeds, VertexSet within) {
    VertexSet reach = seeds & within;
    for (;;) {
        VertexSet grow = reach;
        for (int v : bits(reach)) grow |= g.neighbors(v) & within;
        if (grow == reach) return reach;
        reach = grow;
    }
}

int longest_cycle_dp(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> dp(size_t{1} << n, 0);
    int best = 0;
    for (VertexSet mask = 1; mask < (VertexSet{1} << n); ++mask) {
        int r = lowest(mask);
        if (mask == bit(r)) {
            dp[mask] = bit(r);
            continue;
        }
        VertexSet ep = 0;
        for (int v : bits(mask & ~bit(r)))
            if (dp[mask ^ bit(v)] & g.neighbors(v)) ep |= bit(v);
        dp[mask] = ep;
        if (popcount(mask) >= 3 && popcount(mask) > best && (ep & g.neighbors(r)))
            best = popcount(mask);
    }
    return best;
}

struct CycleBB {
    const Graph& g;
    int best = 0;
    std::vector<int> path;
    VertexSet used = 0;
    VertexSet allowed = 0;

    void dfs(int cur, int root) {
        if (g.has_edge(cur, root) && (int)path.size() >= 3)
            best = std::max(best, (int)path.size());
        VertexSet free = allowed & ~used;
        VertexSet reach = reach_from(g, g.neighbors(cur) & free, free);
        if ((int)path.size() + popcount(reach) <= best) return;
        if (!(reach & g.neighbors(root)) ) return;
        for (int v : bits(g.neighbors(cur) & free)) {
            path.push_back(v);
            used |= bit(v);
            dfs(v, root);
            used &= ~bit(v);
            path.pop_back();
        }
    }

    int run() {
        int n = g.order();
        for (int r = 0; r < n; ++r) {
            if (best >= n - r) break;
            allowed = full_set(n) & ~full_set(r);
            path = {r};
            used = bit(r);
            dfs(r, r);
        }
        return best;
    }
};

}  // namespace

bool is_valid_cycle(const Graph& g, const CycleWitness& c) {
    int len = c.length();
    if (len < 3) return false;
    VertexSet seen = 0;
    for (int v : c.vertices) {
        if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    for (int i = 0; i < len; ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % len])) return false;
    return true;
}

int circumference(const Graph& g) {
    int best = g.order() <= kDpLimit ? longest_cycle_dp(g) : CycleBB{g}.run();
    return best >= 3 ? best : 2;  // acyclic convention
}

namespace {

// Lexicographically least longest cycle: try roots ascending; DFS neighbors
// ascending over vertices greater than the root.
bool witness_dfs(const Graph& g, std::vector<int>& path, VertexSet used,
                 VertexSet allowed, int target, int root) {
    int cur = path.back();
    if ((int)path.size() == target) return g.has_edge(cur, root);
    VertexSet free = allowed & ~used;
    VertexSet reach = reach_from(g, g.neighbors(cur) & free, free);
    if (popcount(reach) < target - (int)path.size()) return false;
    if (!(reach & g.neighbors(root))) return false;
    for (int v : bits(g.neighbors(cur) & free)) {
        path.push_back(v);
        if (witness_dfs(g, path, used | bit(v), allowed, target, root)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<CycleWitness> find_longest_cycle(const Graph& g) {
    int target = circumference(g);
    if (target < 3) return std::nullopt;
    int n = g.order();
    for (int root = 0; root + target <= n; ++root) {
        VertexSet allowed = full_set(n) & ~full_set(root);  // root and above
        std::vector<int> path = {root};
        if (witness_dfs(g, path, bit(root), allowed, target, root))
            return CycleWitness{path};
    }
    return std::nullopt;  // unreachable for consistent target
}

CircumferenceResult circumference_with_witness(const Graph& g) {
    auto w = find_longest_cycle(g);
    if (!w) return {2, std::nullopt};
    return {w->length(), std::move(w)};
}

namespace {

void all_cycles_dfs(const Graph& g, std::vector<int>& path, VertexSet used,
                    VertexSet allowed, int target, int root,
                    std::vector<CycleWitness>& out) {
    int cur = path.back();
    if ((int)path.size() == target) {
        if (g.has_edge(cur, root) && path[1] < path.back())
            out.push_back(CycleWitness{path});
        return;
    }
    VertexSet free = allowed & ~used;
    VertexSet reach = reach_from(g, g.neighbors(cur) & free, free);
    if (popcount(reach) < target - (int)path.size()) return;
    if (!(reach & g.neighbors(root))) return;
    for (int v : bits(g.neighbors(cur) & free)) {
        path.push_back(v);
        all_cycles_dfs(g, path, used | bit(v), allowed, target, root, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<CycleWitness> all_longest_cycles(const Graph& g) {
    int target = circumference(g);
    std::vector<CycleWitness> out;
    if (target < 3) return out;
    int n = g.order();
    for (int root = 0; root + target <= n; ++root) {
        VertexSet allowed = full_set(n) & ~full_set(root);
        std::vector<int> path = {root};
        all_cycles_dfs(g, path, bit(root), allowed, target, root, out);
    }
    return out;
}

std::vector<int> longest_paths_from(const Graph& g, int x) {
    int n = g.order();
    std::vector<int> best(n, -1);
    best[x] = 0;
    if (n <= kDpLimit) {
        std::vector<VertexSet> dp(size_t{1} << n, 0);
        dp[bit(x)] = bit(x);
        for (VertexSet mask = 1; mask < (VertexSet{1} << n); ++mask) {
            if (!(mask & bit(x)) || mask == bit(x)) continue;
            VertexSet ep = 0;
            for (int v : bits(mask & ~bit(x)))
                if (dp[mask ^ bit(v)] & g.neighbors(v)) ep |= bit(v);
            dp[mask] = ep;
            int len = popcount(mask) - 1;
            for (int v : bits(ep)) best[v] = std::max(best[v], len);
        }
        return best;
    }
    // branch & bound fallback
    std::vector<int> stack;
    VertexSet used = bit(x);
    auto dfs = [&](auto&& self, int cur, int len) -> void {
        VertexSet free = full_set(n) & ~used;
        VertexSet reach = reach_from(g, g.neighbors(cur) & free, free);
        bool improvable = false;
        for (int v : bits(reach))
            if (len + 1 > best[v]) { improvable = true; break; }
        if (!improvable) return;
        for (int v : bits(g.neighbors(cur) & free)) {
            used |= bit(v);
            best[v] = std::max(best[v], len + 1);
            self(self, v, len + 1);
            used &= ~bit(v);
        }
    };
    dfs(dfs, x, 0);
    return best;
}

std::optional<int> longest_xy_path(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("longest_xy_path: x == y");
    int r = longest_paths_from(g, x)[y];
    if (r < 0) return std::nullopt;
    return r;
}

std::optional<int> longest_through_path(const Graph& g, int x, int y, VertexSet h) {
    if (x == y) throw std::invalid_argument("longest_through_path: x == y");
    if ((h & bit(x)) || (h & bit(y)))
        throw std::invalid_argument("longest_through_path: endpoint inside h");
    std::vector<int> map;
    Graph sub = induced(g, h | bit(x) | bit(y), &map);
    int xi = -1, yi = -1;
    for (size_t i = 0; i < map.size(); ++i) {
        if (map[i] == x) xi = (int)i;
        if (map[i] == y) yi = (int)i;
    }
    return longest_xy_path(sub, xi, yi);
}

std::optional<int> longest_through_path_proper(const Graph& g, int x, int y, VertexSet h) {
    if (x == y) throw std::invalid_argument("longest_through_path: x == y");
    if ((h & bit(x)) || (h & bit(y)))
        throw std::invalid_argument("longest_through_path: endpoint inside h");
    if (!h) return std::nullopt;
    std::vector<int> map;
    Graph sub = induced(g, h | bit(x) | bit(y), &map);
    int xi = -1, yi = -1;
    for (size_t i = 0; i < map.size(); ++i) {
        if (map[i] == x) xi = (int)i;
        if (map[i] == y) yi = (int)i;
    }
    sub.remove_edge(xi, yi);
    auto r = longest_xy_path(sub, xi, yi);
    if (r && *r < 2) return std::nullopt;
    return r;
}

bool is_hamiltonian(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("is_hamiltonian: n < 3");
    return circumference(g) == g.order();
}

bool is_hamiltonian_connected(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("is_hamiltonian_connected: n < 2");
    for (int x = 0; x < n; ++x) {
        auto best = longest_paths_from(g, x);
        for (int y = x + 1; y < n; ++y)
            if (best[y] != n - 1) return false;
    }
    return true;
}

bool is_locally_maximal(const Graph& g, const CycleWitness& c) {
    if (!is_valid_cycle(g, c))
        throw std::invalid_argument("is_locally_maximal: witness is not a cycle of g");
    int len = c.length();
    VertexSet vc = c.vertex_mask();
    VertexSet off = g.vertex_set() & ~vc;

    std::vector<int> map;
    Graph inside = induced(g, vc, &map);
    if (circumference(inside) > len) return false;  // 0 crossings, inside V(C)
    if (off && circumference(induced(g, off)) > len) return false;  // 0 crossings, outside

    // 2 crossings: an (x, G-C, x')-path plus a path inside G[C].  The inside
    // part may degenerate to the single vertex x = x', in which case the rival
    // cycle meets V(C) only at x.
    if (!off) return true;
    std::vector<int> off_map;
    Graph outside = induced(g, off, &off_map);
    for (int x : bits(vc)) {
        // longest cycle through x with every other vertex off C
        std::vector<int> xn;  // neighbours of x inside off, as outside indices
        for (size_t j = 0; j < off_map.size(); ++j)
            if (g.has_edge(x, off_map[j])) xn.push_back((int)j);
        for (size_t a = 0; a < xn.size(); ++a) {
            auto best = longest_paths_from(outside, xn[a]);
            for (size_t b = a + 1; b < xn.size(); ++b)
                if (best[xn[b]] >= 1 && best[xn[b]] + 2 > len) return false;
        }
    }
    for (size_t i = 0; i < map.size(); ++i) {
        int x = map[i];
        std::vector<int> in_best;
        bool have = false;
        for (size_t j = i + 1; j < map.size(); ++j) {
            int xp = map[j];
            auto ell = longest_through_path_proper(g, x, xp, off);
            if (!ell) continue;
            if (!have) {
                in_best = longest_paths_from(inside, (int)i);
                have = true;
            }
            if (*ell + in_best[(int)j] > len) return false;
        }
    }
    return true;
}

}  // namespace circum
