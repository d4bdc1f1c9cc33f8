#ifndef CIRCUM_FAMILIES_HPP
#define CIRCUM_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace circum {

// f(n,k,c) = C(c-k+1,2) + k(n-c+k-1), the W edge count.
long long f_bound(long long n, long long k, long long c);

// h(n,k) = C(n-k,2) + k(k-1); h(n+1,k) = e(W_{n,k,n}).
long long h_bound(long long n, long long k);

// max of f(n,k,c) over [a,b]; attained at an endpoint by convexity.
long long stability_threshold(long long n, long long c, long long a, long long b);

struct FamilySpec {
    enum Tag { W, Z, X, Y } tag;
    int n = 0;
    int k = 0;  // W/Z only
    int c = 0;
    int b_size = 0;  // X: |B|
    int x_size = 0;  // X: |X|
    struct Star {
        int size;     // vertex count, >= 2
        char attach;  // 'a' or 'b': the leaves' common neighbor
    };
    std::vector<Star> stars;  // Y only
};

// Parse "W:n=12,k=2,c=10", "Z:n=12,k=3,c=10", "X:n=14,c=11,b=6",
// "X:n=14,c=11,b=6,x=3", "Y:n=14,c=11,stars=2a+3b". Throws on bad input.
FamilySpec parse_family_spec(const std::string& text);

// Throws std::invalid_argument naming the violated invariant.
void validate_family_spec(const FamilySpec& spec);

// Canonical member: clique first, attach set = lowest indices, outside last.
Graph construct_family(const FamilySpec& spec);

// Convenience constructors.
Graph construct_W(int n, int k, int c);
Graph construct_Z(int n, int k, int c);

// G subseteq W_{n,k,c}: a stable set D of size n-c+k-1 with |N(D)| <= k.
// Returns D on success.
std::optional<VertexSet> w_subgraph_witness(const Graph& g, int k, int c);
bool is_subgraph_of_W(const Graph& g, int k, int c);

bool is_subgraph_of_Z(const Graph& g, int k, int c);
bool equals_Z(const Graph& g, int k, int c);

struct XYVerdict {
    enum Kind { InX, InY, Neither } kind = Neither;
    VertexSet clique_part = 0;   // A
    VertexSet stable_part = 0;   // B
    VertexSet pendant_part = 0;  // X or Y
    int a = -1, b = -1;
};

// Membership of g as a spanning subgraph of some X- or Y-family member
// with odd circumference parameter c.
XYVerdict xy_membership(const Graph& g, int c);

}  // namespace circum

#endif
