#include "enumerate.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "canon.hpp"
#include "cycles.hpp"

namespace circum {

namespace {

bool structural_pass(const Graph& g, const EnumSpec& spec) {
    if (spec.n > 0 && g.order() != spec.n) return false;
    if (g.min_degree() < spec.min_degree) return false;
    if (g.edge_count() < spec.min_edges) return false;
    if (spec.require_2connected && (g.order() < 3 || !is_two_connected(g)))
        return false;
    return true;
}

bool circumference_pass(const Graph& g, const EnumSpec& spec) {
    if (spec.min_circumference <= 0 && spec.max_circumference < 0) return true;
    int c = circumference(g);
    if (c < spec.min_circumference) return false;
    if (spec.max_circumference >= 0 && c > spec.max_circumference) return false;
    return true;
}

Graph extend(const Graph& p, VertexSet nbrs) {
    Graph child(p.order() + 1);
    for (int v = 0; v < p.order(); ++v)
        for (int u : bits(p.neighbors(v) & ~full_set(v + 1)))
            child.add_edge(v, u);
    for (int v : bits(nbrs)) child.add_edge(p.order(), v);
    return child;
}

}  // namespace

bool passes_filters(const Graph& g, const EnumSpec& spec) {
    return structural_pass(g, spec) && circumference_pass(g, spec);
}

void generate(const EnumSpec& spec, const std::function<void(const Graph&)>& emit) {
    if (spec.n < 1 || spec.n > 10)
        throw std::out_of_range("generate: order must be in [1,10]");
    if (spec.min_degree > spec.n - 1)
        throw std::invalid_argument("generate: min_degree filter exceeds n-1");
    if (spec.n == 1) {
        Graph k1(1);
        if (passes_filters(k1, spec)) emit(k1);
        return;
    }
    std::vector<Graph> level = {Graph(1)};
    for (int ell = 2; ell <= spec.n; ++ell) {
        bool final = ell == spec.n;
        int m = ell - 1;  // the added vertex
        std::vector<Graph> next;
        for (const Graph& p : level) {
            // component structure of p - v, reused across all subsets
            std::vector<std::vector<VertexSet>> comps_without(m);
            for (int v = 0; v < m; ++v)
                comps_without[v] = components(p, p.vertex_set() & ~bit(v));
            std::unordered_set<std::uint64_t> seen;
            for (VertexSet s = 1; s < (VertexSet{1} << m); ++s) {
                Graph child = extend(p, s);
                if (final && !structural_pass(child, spec)) continue;

                // the canonical deletion test: the new vertex must lie in the
                // orbit of the canonically selected deletable vertex
                auto inv = wl_colors(child);
                VertexSet deletable = bit(m);
                std::uint64_t min_inv = inv[m];
                for (int v = 0; v < m; ++v) {
                    if (s == bit(v)) continue;  // m would be isolated
                    bool ok = true;
                    for (VertexSet comp : comps_without[v])
                        if (!(comp & s)) { ok = false; break; }
                    if (!ok) continue;
                    deletable |= bit(v);
                    min_inv = std::min(min_inv, inv[v]);
                }
                if (inv[m] > min_inv) continue;

                CanonResult canon = canonical_form(child);
                int ustar = m;
                for (int v : bits(deletable))
                    if (std::pair(inv[v], canon.pos[v]) <
                        std::pair(inv[ustar], canon.pos[ustar]))
                        ustar = v;
                if (ustar != m) {
                    if (inv[ustar] != inv[m]) continue;
                    if (!has_automorphism_mapping(child, m, ustar)) continue;
                }
                if (!seen.insert(canon.cert).second) continue;

                if (final) {
                    if (circumference_pass(child, spec)) emit(child);
                } else {
                    next.push_back(std::move(child));
                }
            }
        }
        if (!final) level = std::move(next);
    }
}

std::vector<Graph> generate_all(const EnumSpec& spec) {
    std::vector<Graph> out;
    generate(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

IngestStats ingest_graph6(std::istream& in, const EnumSpec& filters, bool strict,
                          const std::function<void(const Graph&)>& emit) {
    IngestStats stats;
    std::string line;
    while (std::getline(in, line)) {
        ++stats.lines;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            Graph g = graph6_decode(line);
            if (passes_filters(g, filters)) {
                emit(g);
                ++stats.emitted;
            }
        } catch (const Graph6Error& e) {
            if (strict)
                throw Graph6Error("line " + std::to_string(stats.lines) + ": " +
                                  e.what());
            stats.errors.push_back({(int)stats.lines, e.what()});
        }
    }
    return stats;
}

}  // namespace circum
