#ifndef CIRCUM_CANON_HPP
#define CIRCUM_CANON_HPP

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace circum {

// Iterated neighborhood-refinement colors; equal colors for vertices that
// the refinement cannot distinguish. Isomorphism-invariant.
std::vector<std::uint64_t> wl_colors(const Graph& g, int rounds = 3);

struct CanonResult {
    std::vector<int> order;  // order[i] = vertex placed at canonical position i
    std::vector<int> pos;    // inverse of order
    std::uint64_t cert;      // upper-triangle bits of the relabeled graph, plus n
};

// Deterministic canonical labeling via individualize-and-refine with a
// uniform-partition shortcut. Isomorphic graphs get equal certs. n <= 11.
CanonResult canonical_form(const Graph& g);

std::uint64_t canonical_cert(const Graph& g);

}  // namespace circum

#endif
