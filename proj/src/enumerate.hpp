#ifndef CIRCUM_ENUMERATE_HPP
#define CIRCUM_ENUMERATE_HPP

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace circum {

struct EnumSpec {
    int n = 0;  // exact order for generate; 0 = unconstrained for ingest
    int min_degree = 0;
    bool require_2connected = false;
    int min_circumference = 0;
    int max_circumference = -1;  // -1 = unbounded
    int min_edges = 0;
};

bool passes_filters(const Graph& g, const EnumSpec& spec);

// One representative per isomorphism class of connected graphs of order
// spec.n that satisfy the filters; canonical-augmentation generation,
// n <= 10.
void generate(const EnumSpec& spec, const std::function<void(const Graph&)>& emit);

std::vector<Graph> generate_all(const EnumSpec& spec);

struct IngestError {
    int line;  // 1-based
    std::string message;
};

struct IngestStats {
    long long lines = 0;
    long long emitted = 0;
    std::vector<IngestError> errors;
};

// Decode graph6 lines and emit graphs passing the filters, in input order.
// strict: throw Graph6Error naming the line; otherwise record and skip.
IngestStats ingest_graph6(std::istream& in, const EnumSpec& filters, bool strict,
                          const std::function<void(const Graph&)>& emit);

}  // namespace circum

#endif
