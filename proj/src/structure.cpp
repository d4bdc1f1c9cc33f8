#include "structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace circum {

std::vector<VertexSet> components_off_cycle(const Graph& g, const CycleWitness& c) {
    if (!is_valid_cycle(g, c))
        throw std::invalid_argument("components_off_cycle: witness is not a cycle of g");
    return components(g, g.vertex_set() & ~c.vertex_mask());
}

namespace {

// Consecutive attachment vertices need independent edges into R: a system
// of two distinct R-endpoints exists iff the neighborhoods jointly cover
// two vertices.
bool pair_feasible(VertexSet nr_a, VertexSet nr_b) {
    return nr_a && nr_b && popcount(nr_a | nr_b) >= 2;
}

}  // namespace

AttachmentReport max_strong_attachment(const Graph& g, const CycleWitness& c,
                                       VertexSet r) {
    auto comps = components_off_cycle(g, c);
    if (std::find(comps.begin(), comps.end(), r) == comps.end())
        throw std::invalid_argument("max_strong_attachment: r is not a component of g - C");

    // candidates: cycle vertices with a neighbor in R, in witness order
    std::vector<int> cand;
    std::vector<VertexSet> nr;
    for (int v : c.vertices) {
        VertexSet in_r = g.neighbors(v) & r;
        if (in_r) {
            cand.push_back(v);
            nr.push_back(in_r);
        }
    }
    int m = (int)cand.size();

    AttachmentReport rep;
    rep.r = r;
    if (m == 0) return rep;

    std::vector<std::vector<char>> feas(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            feas[i][j] = i != j && pair_feasible(nr[i], nr[j]);

    // longest chain over positions first..j with feasible consecutive picks
    int best = 1;
    std::vector<std::vector<int>> chain(m, std::vector<int>(m, 0));
    for (int f = 0; f < m; ++f) {
        chain[f][f] = 1;
        for (int j = f + 1; j < m; ++j) {
            for (int i = f; i < j; ++i)
                if (chain[f][i] && feas[i][j])
                    chain[f][j] = std::max(chain[f][j], chain[f][i] + 1);
            if (chain[f][j] >= 2 && feas[j][f])
                best = std::max(best, chain[f][j]);
        }
    }

    std::vector<int> pick;
    if (best == 1) {
        pick = {0};
    } else {
        // lexicographically least position sequence of the maximum size
        std::vector<int> cur;
        auto dfs = [&](auto&& self, int last, int first) -> bool {
            if ((int)cur.size() == best) return feas[last][first];
            for (int j = last + 1; j < m; ++j) {
                if (!feas[last][j]) continue;
                // enough feasible positions left?
                if ((int)cur.size() + 1 + (m - 1 - j) < best) break;
                cur.push_back(j);
                if (self(self, j, first)) return true;
                cur.pop_back();
            }
            return false;
        };
        for (int f = 0; f + best <= m && pick.empty(); ++f) {
            cur = {f};
            if (dfs(dfs, f, f)) pick = cur;
        }
    }

    rep.t = (int)pick.size();
    for (int i : pick) rep.t_vertices.push_back(cand[i]);
    VertexSet t_mask = 0;
    for (int v : rep.t_vertices) t_mask |= bit(v);
    for (int v : cand)
        if (!(t_mask & bit(v))) rep.s_set |= bit(v);
    rep.s = popcount(rep.s_set);
    if (rep.t >= 2) {
        for (int i = 0; i < rep.t; ++i) {
            int u = rep.t_vertices[i];
            int w = rep.t_vertices[(i + 1) % rep.t];
            auto d = longest_through_path(g, u, w, r);
            rep.through_lengths.push_back(d ? *d : 0);
        }
    }
    return rep;
}

namespace {

void clique_expand(const Graph& g, VertexSet cand, int size, int& best) {
    if (!cand) {
        best = std::max(best, size);
        return;
    }
    // greedy coloring for the pruning bound; branch highest color first
    std::vector<int> verts, color_of;
    VertexSet uncol = cand;
    int color = 0;
    while (uncol) {
        ++color;
        VertexSet avail = uncol;
        while (avail) {
            int v = lowest(avail);
            avail &= ~(g.neighbors(v) | bit(v));
            uncol &= ~bit(v);
            verts.push_back(v);
            color_of.push_back(color);
        }
    }
    for (int i = (int)verts.size() - 1; i >= 0; --i) {
        if (size + color_of[i] <= best) return;
        int v = verts[i];
        clique_expand(g, cand & g.neighbors(v), size + 1, best);
        cand &= ~bit(v);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 0;
    clique_expand(g, g.vertex_set(), 0, best);
    return best;
}

std::optional<bool> clique_bound_check(const Graph& g, const CycleWitness& c,
                                       VertexSet r, int d) {
    if (d < 2) return std::nullopt;
    if (!is_valid_cycle(g, c) || !is_locally_maximal(g, c)) return std::nullopt;
    AttachmentReport rep = max_strong_attachment(g, c, r);
    for (int len : rep.through_lengths)
        if (len < d) return std::nullopt;  // hypothesis on d fails
    int omega = clique_number(induced(g, c.vertex_mask()));
    long long len = c.length();
    long long base = len - (long long)(d - 1) * (rep.t - 1);
    return omega <= base && omega <= base - rep.s;
}

EdgeSplit bondy_edge_split(const Graph& g, const CycleWitness& c) {
    if (!is_valid_cycle(g, c))
        throw std::invalid_argument("bondy_edge_split: witness is not a cycle of g");
    int inside = g.edges_within(c.vertex_mask());
    return {inside, g.edge_count() - inside};
}

Graph edge_switch(const Graph& g, int y, int x, VertexSet a_set) {
    if (!g.has_edge(x, y)) throw std::invalid_argument("edge_switch: xy not an edge");
    if (a_set & ~(g.neighbors(y) & ~(g.neighbors(x) | bit(x))))
        throw std::invalid_argument("edge_switch: a_set not inside N(y) \\ (N(x) u {x})");
    Graph h = g;
    for (int z : bits(a_set)) {
        h.remove_edge(y, z);
        h.add_edge(x, z);
    }
    return h;
}

namespace {

// nonempty subsets of the bits of `pool`, largest first; huge pools keep
// only the full set and the singletons
std::vector<VertexSet> switch_candidates(VertexSet pool) {
    std::vector<int> elems;
    for (int v : bits(pool)) elems.push_back(v);
    std::vector<VertexSet> out;
    if (elems.size() > 16) {
        out.push_back(pool);
        for (int v : elems) out.push_back(bit(v));
        return out;
    }
    for (VertexSet m = 1; m < (VertexSet{1} << elems.size()); ++m) {
        VertexSet s = 0;
        for (size_t i = 0; i < elems.size(); ++i)
            if (m & (VertexSet{1} << i)) s |= bit(elems[i]);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    return out;
}

bool switch_ok(const Graph& h, const CycleWitness& c) {
    return h.order() >= 3 && is_two_connected(h) && is_locally_maximal(h, c);
}

}  // namespace

FixpointResult switch_fixpoint(const Graph& g, const CycleWitness& c) {
    if (g.order() < 3 || !is_two_connected(g))
        throw std::invalid_argument("switch_fixpoint: graph not 2-connected");
    if (!is_valid_cycle(g, c) || !is_locally_maximal(g, c))
        throw std::invalid_argument("switch_fixpoint: cycle not locally maximal");

    FixpointResult res{g};
    VertexSet cmask = c.vertex_mask();
    int off_edges = res.graph.edges_within(res.graph.vertex_set() & ~cmask);
    for (int iter = 0; iter <= off_edges; ++iter) {
        const Graph& cur = res.graph;
        bool dirty = false;
        bool applied = false;
        for (VertexSet r : components_off_cycle(cur, c)) {
            VertexSet ncr = 0;
            for (int v : bits(r)) ncr |= cur.neighbors(v) & cmask;
            bool property_i = true;
            for (int x : bits(ncr))
                if ((cur.neighbors(x) & r) != r) { property_i = false; break; }
            if (property_i) continue;
            dirty = true;
            for (int x : bits(ncr)) {
                VertexSet nrx = cur.neighbors(x) & r;
                for (int y : bits(nrx)) {
                    VertexSet pool = cur.neighbors(y) & r & ~nrx;
                    if (!pool) continue;
                    for (VertexSet a : switch_candidates(pool)) {
                        Graph h = edge_switch(cur, y, x, a);
                        if (switch_ok(h, c)) {
                            res.graph = h;
                            applied = true;
                            break;
                        }
                        for (int xp : bits(ncr & ~bit(x))) {
                            if (h.has_edge(y, xp)) continue;
                            Graph h2 = h;
                            h2.add_edge(y, xp);
                            if (switch_ok(h2, c)) {
                                res.graph = h2;
                                ++res.extra_edges;
                                applied = true;
                                break;
                            }
                        }
                        if (applied) break;
                    }
                    if (applied) break;
                }
                if (applied) break;
            }
            if (applied) break;
        }
        if (!dirty) return res;
        if (!applied) {
            res.violation = true;
            return res;
        }
        ++res.switches;
    }
    res.violation = true;  // failed to terminate within the strict-decrease bound
    return res;
}

}  // namespace circum
