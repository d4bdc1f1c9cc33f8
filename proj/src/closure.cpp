#include "closure.hpp"

#include <algorithm>
#include <deque>

#include "families.hpp"

namespace circum {

std::pair<Graph, ClosureTrace> k_closure(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_closure: negative threshold");
    Graph h = g;
    ClosureTrace trace;
    trace.threshold = k;
    int n = h.order();
    std::deque<std::pair<int, int>> work;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!h.has_edge(u, v)) work.push_back({u, v});
    while (!work.empty()) {
        auto [u, v] = work.front();
        work.pop_front();
        if (h.has_edge(u, v)) continue;
        if (h.degree(u) + h.degree(v) < k) continue;
        h.add_edge(u, v);
        trace.added_edges.push_back({u, v});
        for (int e : {u, v})
            for (int w = 0; w < n; ++w)
                if (w != e && !h.has_edge(e, w))
                    work.push_back({std::min(e, w), std::max(e, w)});
    }
    return {h, trace};
}

Graph c_closure(const Graph& g, const CycleWitness& c) {
    if (!is_valid_cycle(g, c))
        throw std::invalid_argument("c_closure: witness is not a cycle of g");
    std::vector<int> map;
    Graph sub = induced(g, c.vertex_mask(), &map);
    Graph closed = k_closure(sub, c.length() + 1).first;
    Graph out = g;
    for (int i = 0; i < closed.order(); ++i)
        for (int j = i + 1; j < closed.order(); ++j)
            if (closed.has_edge(i, j) && !out.has_edge(map[i], map[j]))
                out.add_edge(map[i], map[j]);
    return out;
}

std::optional<int> chvatal_witness(const Graph& g) {
    int n = g.order();
    if (n < 3) throw std::invalid_argument("chvatal_witness: n < 3");
    auto d = degree_sequence(g);  // d[0] = d_1
    for (int s = 1; 2 * s < n; ++s)
        if (d[s - 1] <= s && d[n - s - 1] < n - s) return s;
    return std::nullopt;
}

std::optional<SmallDegreeSet> small_degree_set(const Graph& g) {
    if (g.min_degree() < 2) throw std::invalid_argument("small_degree_set: min degree < 2");
    if (is_hamiltonian_connected(g)) return std::nullopt;
    int n = g.order();
    for (int s = 2; s <= n / 2; ++s) {
        VertexSet low = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) <= s) low |= bit(v);
        if (popcount(low) >= s - 1) {
            VertexSet pick = 0;
            for (int v : bits(low)) {
                if (popcount(pick) == s - 1) break;
                pick |= bit(v);
            }
            return SmallDegreeSet{s, pick};
        }
    }
    return std::nullopt;
}

namespace {

// Does some (s-1)-subset of `candidates` hit every nonadjacent pair?
bool find_clique_cover(const Graph& g, VertexSet candidates, int size,
                       const std::vector<std::pair<int, int>>& nonadj,
                       VertexSet chosen, size_t next_pair, VertexSet* out) {
    while (next_pair < nonadj.size()) {
        auto [u, v] = nonadj[next_pair];
        if ((chosen & bit(u)) || (chosen & bit(v))) {
            ++next_pair;
            continue;
        }
        if (popcount(chosen) == size) return false;
        for (int w : {u, v}) {
            if (!(candidates & bit(w))) continue;
            if (find_clique_cover(g, candidates, size, nonadj,
                                  chosen | bit(w), next_pair + 1, out))
                return true;
        }
        return false;
    }
    *out = chosen;
    return true;
}

}  // namespace

DichotomyVerdict closed_graph_dichotomy(const Graph& gc, int p) {
    int c = gc.order();
    int half = c / 2;
    if (p < 0 || gc.min_degree() < 2) return {DichotomyVerdict::NotApplicable};
    // must be (c+1)-closed
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v)
            if (!gc.has_edge(u, v) && gc.degree(u) + gc.degree(v) >= c + 1)
                return {DichotomyVerdict::NotApplicable};
    if (half - p < 0 || gc.edge_count() <= h_bound(c + 1, half - p))
        return {DichotomyVerdict::NotApplicable};
    if (is_hamiltonian_connected(gc)) return {DichotomyVerdict::NotApplicable};

    std::vector<std::pair<int, int>> nonadj;
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v)
            if (!gc.has_edge(u, v)) nonadj.push_back({u, v});

    for (int s = 2; s <= half - p - 1; ++s) {
        VertexSet candidates = 0;
        for (int v = 0; v < c; ++v)
            if (gc.degree(v) <= s) candidates |= bit(v);
        if (popcount(candidates) < s - 1) continue;
        VertexSet S = 0;
        if (find_clique_cover(gc, candidates, s - 1, nonadj, 0, 0, &S)) {
            // removing more vertices keeps the complement a clique, so pad
            // freely with remaining low-degree vertices
            for (int v : bits(candidates & ~S)) {
                if (popcount(S) == s - 1) break;
                S |= bit(v);
            }
            return {DichotomyVerdict::CliqueCase, S, s};
        }
    }
    for (int t = half - p + 1; t <= half; ++t) {
        VertexSet low = 0;
        for (int v = 0; v < c; ++v)
            if (gc.degree(v) <= t) low |= bit(v);
        if (popcount(low) >= t - 1) {
            VertexSet pick = 0;
            for (int v : bits(low)) {
                if (popcount(pick) == t - 1) break;
                pick |= bit(v);
            }
            return {DichotomyVerdict::BigSetCase, pick, t};
        }
    }
    return {DichotomyVerdict::NotApplicable};
}

}  // namespace circum
