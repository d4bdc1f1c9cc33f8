#ifndef CIRCUM_CLOSURE_HPP
#define CIRCUM_CLOSURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cycles.hpp"
#include "graph.hpp"

namespace circum {

struct ClosureTrace {
    std::vector<std::pair<int, int>> added_edges;  // in application order
    int threshold = 0;
};

// Fixpoint of joining nonadjacent pairs with degree sum >= k.
std::pair<Graph, ClosureTrace> k_closure(const Graph& g, int k);

// Replace G[C] by its (|C|+1)-closure, degrees measured inside G[C].
Graph c_closure(const Graph& g, const CycleWitness& c);

// Chvatal witness: smallest s < n/2 with d_s <= s and d_{n-s} < n-s
// (1-indexed nondecreasing degree sequence).
std::optional<int> chvatal_witness(const Graph& g);

struct SmallDegreeSet {
    int s;
    VertexSet vertices;  // s-1 vertices of degree <= s
};

// For a non-Hamiltonian-connected graph with min degree >= 2, the
// guaranteed small-degree set (smallest valid s). nullopt when the graph
// is Hamiltonian-connected.
std::optional<SmallDegreeSet> small_degree_set(const Graph& g);

struct DichotomyVerdict {
    enum Kind { CliqueCase, BigSetCase, NotApplicable } kind;
    VertexSet witness = 0;
    int bound = 0;  // the s (CliqueCase) or t (BigSetCase)
};

// Which clause of the closed-graph dichotomy holds for a (c+1)-closed,
// non-Hamiltonian-connected graph on c vertices with enough edges.
DichotomyVerdict closed_graph_dichotomy(const Graph& gc, int p);

}  // namespace circum

#endif
