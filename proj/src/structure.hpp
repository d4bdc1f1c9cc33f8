#ifndef CIRCUM_STRUCTURE_HPP
#define CIRCUM_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "cycles.hpp"
#include "graph.hpp"

namespace circum {

std::vector<VertexSet> components_off_cycle(const Graph& g, const CycleWitness& c);

// A strong attachment of a component R to a cycle C: cycle vertices T in
// cyclic order such that every consecutive pair sends independent edges
// into R.
struct AttachmentReport {
    VertexSet r = 0;
    std::vector<int> t_vertices;  // cyclic order of c
    VertexSet s_set = 0;          // N_C(R) minus T
    int t = 0;
    int s = 0;
    // d*_R(u_i, u_{i+1}) for consecutive pairs, wrapping; size t when t >= 2
    std::vector<int> through_lengths;
};

// Maximum strong attachment, lexicographically least among maximum ones
// (by position along the cycle witness). t = 1 means no size-2 attachment
// exists; t = 0 means R has no neighbor on C.
AttachmentReport max_strong_attachment(const Graph& g, const CycleWitness& c,
                                       VertexSet r);

int clique_number(const Graph& g);

// Clique bound for the cycle's interior from attachment data: with the
// maximum strong attachment T of R and every consecutive pair at through-R
// distance >= d >= 2, checks omega <= |C| - (d-1)(t-1) - q (and the weaker
// bound without q). nullopt when the preconditions fail.
std::optional<bool> clique_bound_check(const Graph& g, const CycleWitness& c,
                                       VertexSet r, int d);

struct EdgeSplit {
    int inside;                 // e(g[V(C)])
    int crossing_plus_outside;  // e(g) - inside
};

EdgeSplit bondy_edge_split(const Graph& g, const CycleWitness& c);

// G[y->x; A]: move the edges from y into A over to x. Requires xy in E(g)
// and a_set inside N(y) minus (N(x) and {x}).
Graph edge_switch(const Graph& g, int y, int x, VertexSet a_set);

struct FixpointResult {
    Graph graph;
    int switches = 0;
    int extra_edges = 0;   // fallback yx' insertions
    bool violation = false;  // no conforming switch found before the fixpoint
};

// Repeatedly apply edge switches (largest valid A first, with the yx'
// fallback when 2-connectivity breaks) until every x in N_C(R) is adjacent
// to all of R, for every off-cycle component R. Requires g 2-connected and
// c locally maximal.
FixpointResult switch_fixpoint(const Graph& g, const CycleWitness& c);

}  // namespace circum

#endif
