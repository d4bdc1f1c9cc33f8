#include <doctest.h>

#include <random>

#include "cycles.hpp"
#include "families.hpp"
#include "helpers.hpp"
#include "structure.hpp"

using namespace circum;
using namespace circum::testutil;

namespace {

// C6 with a pendant edge component: 6~0, 7~3, 6~7
Graph hex_with_bridge() {
    Graph g(8);
    for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
    g.add_edge(6, 7);
    g.add_edge(6, 0);
    g.add_edge(7, 3);
    return g;
}

const CycleWitness kHex{{0, 1, 2, 3, 4, 5}};

}  // namespace

TEST_CASE("components_off_cycle") {
    Graph g = hex_with_bridge();
    auto comps = components_off_cycle(g, kHex);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == (bit(6) | bit(7)));
    CHECK(components_off_cycle(cycle_graph(5), CycleWitness{{0, 1, 2, 3, 4}})
              .empty());
}

TEST_CASE("max_strong_attachment on the bridge fixture") {
    Graph g = hex_with_bridge();
    auto rep = max_strong_attachment(g, kHex, bit(6) | bit(7));
    CHECK(rep.t == 2);
    CHECK(rep.s == 0);
    CHECK(rep.t_vertices == std::vector<int>{0, 3});
    CHECK(rep.s_set == 0);
    REQUIRE(rep.through_lengths.size() == 2);
    CHECK(rep.through_lengths[0] == 3);  // 0-6-7-3
    CHECK(rep.through_lengths[1] == 3);
}

TEST_CASE("max_strong_attachment degenerate cases") {
    // singleton component with one cycle neighbor: t = 1
    Graph g = cycle_graph(6);
    Graph h(7);
    for (int i = 0; i < 6; ++i) h.add_edge(i, (i + 1) % 6);
    h.add_edge(6, 0);
    auto rep = max_strong_attachment(h, kHex, bit(6));
    CHECK(rep.t == 1);
    CHECK(rep.t_vertices == std::vector<int>{0});
    CHECK(rep.s == 0);

    // component with no cycle neighbor at all: t = 0
    Graph iso(7);
    for (int i = 0; i < 6; ++i) iso.add_edge(i, (i + 1) % 6);
    auto rep0 = max_strong_attachment(iso, kHex, bit(6));
    CHECK(rep0.t == 0);
    CHECK(rep0.t_vertices.empty());

    // singleton with two cycle neighbors: both form a strong attachment
    Graph two(7);
    for (int i = 0; i < 6; ++i) two.add_edge(i, (i + 1) % 6);
    two.add_edge(6, 0);
    two.add_edge(6, 2);
    auto rep2 = max_strong_attachment(two, kHex, bit(6));
    // a singleton cannot send independent edges to two cycle vertices
    CHECK(rep2.t == 1);
    CHECK(rep2.s == 1);
}

TEST_CASE("max_strong_attachment on a Z component") {
    Graph z = construct_Z(12, 3, 10);
    auto c = find_longest_cycle(z);
    REQUIRE(c);
    CHECK(c->length() == 10);
    auto comps = components_off_cycle(z, *c);
    REQUIRE(comps.size() == 1);
    auto rep = max_strong_attachment(z, *c, comps[0]);
    CHECK(rep.t == 2);
    CHECK(rep.s == 0);
    // the component K2 hangs on the clique pair {0,1}
    CHECK((bit(rep.t_vertices[0]) | bit(rep.t_vertices[1])) == (bit(0) | bit(1)));
}

TEST_CASE("strong attachment soundness on random graphs") {
    std::mt19937_64 rng(61);
    for (int rep_i = 0; rep_i < 120; ++rep_i) {
        Graph g = random_graph(9, 0.3, rng);
        auto c = find_longest_cycle(g);
        if (!c) continue;
        for (VertexSet r : components_off_cycle(g, *c)) {
            auto rep = max_strong_attachment(g, *c, r);
            VertexSet nc = 0;
            for (int v : bits(r)) nc |= g.neighbors(v);
            nc &= c->vertex_mask();
            CHECK(rep.t + rep.s == popcount(nc));
            if (rep.t >= 2) {
                // consecutive pairs (wrapping) send independent edges into R
                for (size_t i = 0; i < rep.t_vertices.size(); ++i) {
                    int u = rep.t_vertices[i];
                    int v = rep.t_vertices[(i + 1) % rep.t_vertices.size()];
                    VertexSet nu = g.neighbors(u) & r;
                    VertexSet nv = g.neighbors(v) & r;
                    CHECK(popcount(nu | nv) >= 2);
                    CHECK(rep.through_lengths[i] >= 2);
                }
                // T follows the cycle witness order
                std::vector<int> pos(g.order(), -1);
                for (int i = 0; i < c->length(); ++i) pos[c->vertices[i]] = i;
                for (size_t i = 0; i + 1 < rep.t_vertices.size(); ++i)
                    CHECK(pos[rep.t_vertices[i]] < pos[rep.t_vertices[i + 1]]);
            }
        }
    }
}

TEST_CASE("clique_number") {
    CHECK(clique_number(complete_graph(7)) == 7);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(Graph(3)) == 1);
    CHECK(clique_number(construct_W(12, 3, 10)) == 8);
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = random_graph(9, 0.5, rng);
        // oracle: check all subsets
        int best = 0;
        for (VertexSet s = 0; s < (VertexSet{1} << 9); ++s) {
            int sz = popcount(s);
            if (sz <= best) continue;
            if (g.edges_within(s) == sz * (sz - 1) / 2) best = sz;
        }
        CHECK(clique_number(g) == best);
    }
}

TEST_CASE("clique_bound_check") {
    Graph g = hex_with_bridge();
    // omega = 2, c = 6, t = 2, d = 3: 2 <= 6 - 2*1 = 4
    auto v = clique_bound_check(g, kHex, bit(6) | bit(7), 3);
    REQUIRE(v);
    CHECK(*v);
    // d = 1 fails the precondition d >= 2
    CHECK(!clique_bound_check(g, kHex, bit(6) | bit(7), 1));
    // d larger than the actual through lengths: precondition fails
    CHECK(!clique_bound_check(g, kHex, bit(6) | bit(7), 4));
}

TEST_CASE("bondy_edge_split") {
    Graph g = hex_with_bridge();
    auto s = bondy_edge_split(g, kHex);
    CHECK(s.inside == 6);
    CHECK(s.crossing_plus_outside == 3);
    CHECK(s.inside + s.crossing_plus_outside == (int)g.edge_count());
    Graph w = construct_W(12, 2, 10);
    auto c = find_longest_cycle(w);
    REQUIRE(c);
    auto sw = bondy_edge_split(w, *c);
    CHECK(sw.inside + sw.crossing_plus_outside == 42);
}

TEST_CASE("edge_switch") {
    // path 3-0-1-2 plus pendant 4 on y=1; switch y=1's extra edges to x=0
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    VertexSet a = bit(2) | bit(4);
    Graph h = edge_switch(g, 1, 0, a);
    CHECK(h.has_edge(0, 2));
    CHECK(h.has_edge(0, 4));
    CHECK(!h.has_edge(1, 2));
    CHECK(!h.has_edge(1, 4));
    CHECK(h.has_edge(0, 1));
    CHECK(h.edge_count() == g.edge_count());

    // preconditions
    CHECK_THROWS_AS(edge_switch(g, 3, 2, 0), std::invalid_argument);  // no edge 2-3
    CHECK_THROWS_AS(edge_switch(g, 1, 0, bit(3)), std::invalid_argument);  // 3 not in N(y)
    Graph t = complete_graph(3);
    CHECK_THROWS_AS(edge_switch(t, 1, 0, bit(2)), std::invalid_argument);  // 2 in N(x)
    CHECK_THROWS_AS(edge_switch(g, 1, 0, bit(0)), std::invalid_argument);  // x itself
}

TEST_CASE("switch_fixpoint on an already-conforming graph") {
    Graph z = construct_Z(12, 3, 10);
    auto c = find_longest_cycle(z);
    REQUIRE(c);
    auto r = switch_fixpoint(z, *c);
    CHECK(r.switches == 0);
    CHECK(r.extra_edges == 0);
    CHECK(!r.violation);
    CHECK(r.graph == z);
}

TEST_CASE("switch_fixpoint properties on random 2-connected graphs") {
    std::mt19937_64 rng(71);
    int ran = 0;
    for (int rep = 0; rep < 3000 && ran < 120; ++rep) {
        Graph g = random_graph(9, 0.32, rng);
        if (!is_two_connected(g)) continue;
        auto c = find_longest_cycle(g);
        REQUIRE(c);
        if (components_off_cycle(g, *c).empty()) continue;
        ++ran;
        auto r = switch_fixpoint(g, *c);
        CHECK(!r.violation);
        CHECK(r.graph.edge_count() >= g.edge_count());
        // the cycle and its interior are untouched
        VertexSet cm = c->vertex_mask();
        for (int u : bits(cm))
            CHECK((r.graph.neighbors(u) & cm) == (g.neighbors(u) & cm));
        CHECK(is_valid_cycle(r.graph, *c));
        CHECK(is_two_connected(r.graph));
        // property (i): every cycle neighbor of an off-cycle component sees
        // the whole component
        for (VertexSet comp : components_off_cycle(r.graph, *c)) {
            VertexSet nc = 0;
            for (int v : bits(comp)) nc |= r.graph.neighbors(v);
            nc &= cm;
            for (int x : bits(nc))
                CHECK((comp & ~r.graph.neighbors(x)) == 0);
        }
    }
    CHECK(ran >= 60);
}
