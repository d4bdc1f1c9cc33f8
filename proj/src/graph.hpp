#ifndef CIRCUM_GRAPH_HPP
#define CIRCUM_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circum {

// Vertex subsets are one machine word; vertices are 0..n-1, n <= 64.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

// Iterate `for (int v : bits(mask))`.
struct bits {
    VertexSet m;
    explicit bits(VertexSet s) : m(s) {}
    struct iter {
        VertexSet m;
        bool operator!=(const iter& o) const { return m != o.m; }
        void operator++() { m &= m - 1; }
        int operator*() const { return std::countr_zero(m); }
    };
    iter begin() const { return {m}; }
    iter end() const { return {0}; }
};

// Simple undirected graph with bit-row adjacency.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count must be in [1,64]");
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("add_edge: loop");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    void remove_edge(int u, int v) {
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }

    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    int min_degree() const {
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    VertexSet vertex_set() const { return full_set(n_); }

    // Edges with both endpoints inside `s`, counted once.
    int edges_within(VertexSet s) const {
        int cnt = 0;
        for (int v : bits(s)) cnt += popcount(adj_[v] & s);
        return cnt / 2;
    }

    bool operator==(const Graph&) const = default;

    friend Graph induced(const Graph& g, VertexSet s, std::vector<int>* back_map);

private:
    int n_;
    std::vector<VertexSet> adj_;
};

// Induced subgraph on `s`; vertices are renumbered in increasing order.
// If back_map is non-null it receives new-index -> old-index.
Graph induced(const Graph& g, VertexSet s, std::vector<int>* back_map = nullptr);

std::vector<int> degree_sequence(const Graph& g);

bool is_stable(const Graph& g, VertexSet s);

// Components of g restricted to `within`.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

// n >= 3, connected, no cut vertex.
bool is_two_connected(const Graph& g);

struct Block {
    VertexSet vertices;
    bool is_end_block;
};

// Block decomposition of a connected graph. End-blocks contain at most one
// cut vertex of g.
std::vector<Block> blocks(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Automorphism of g mapping `from` to `to`?
bool has_automorphism_mapping(const Graph& g, int from, int to);

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

}  // namespace circum

#endif
