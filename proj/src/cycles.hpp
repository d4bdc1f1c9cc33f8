#ifndef CIRCUM_CYCLES_HPP
#define CIRCUM_CYCLES_HPP

#include <optional>
#include <vector>

#include "graph.hpp"

namespace circum {

// Ordered vertex sequence certifying a cycle.
struct CycleWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    VertexSet vertex_mask() const {
        VertexSet s = 0;
        for (int v : vertices) s |= bit(v);
        return s;
    }
};

bool is_valid_cycle(const Graph& g, const CycleWitness& c);

// Length of a longest cycle; 2 with no witness for acyclic graphs.
struct CircumferenceResult {
    int length;
    std::optional<CycleWitness> witness;
};

int circumference(const Graph& g);
CircumferenceResult circumference_with_witness(const Graph& g);

// Longest cycle with deterministic tie-breaking: lexicographically least
// vertex sequence among optimal cycles, rooted at its smallest vertex.
// Empty optional on forests.
std::optional<CycleWitness> find_longest_cycle(const Graph& g);

// All longest cycles as vertex sets (small n only).
std::vector<CycleWitness> all_longest_cycles(const Graph& g);

// Maximum edge-count of a simple x-y path; nullopt when x and y are in
// different components.
std::optional<int> longest_xy_path(const Graph& g, int x, int y);

// longest_xy_path from x to every other vertex at once; -1 where no path.
std::vector<int> longest_paths_from(const Graph& g, int x);

// Longest (x,h,y)-path: all internal vertices inside h. x,y must not be in h.
std::optional<int> longest_through_path(const Graph& g, int x, int y, VertexSet h);

// Same, but requiring at least one internal vertex (drops the direct edge).
std::optional<int> longest_through_path_proper(const Graph& g, int x, int y, VertexSet h);

bool is_hamiltonian(const Graph& g);
bool is_hamiltonian_connected(const Graph& g);

// No longer cycle crossing E(C, G-C) at most twice.
bool is_locally_maximal(const Graph& g, const CycleWitness& c);

}  // namespace circum

#endif
