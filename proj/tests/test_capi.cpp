#include <doctest.h>

#include <cstring>
#include <string>

#include <circum.h>

TEST_CASE("graph round trip through the C interface") {
    cx_graph* g = nullptr;
    REQUIRE(cx_graph_from_graph6("D~{", &g) == CX_OK);
    char buf[16];
    REQUIRE(cx_graph_to_graph6(g, buf, sizeof buf) == CX_OK);
    CHECK(std::string(buf) == "D~{");
    // undersized buffer
    char tiny[2];
    CHECK(cx_graph_to_graph6(g, tiny, sizeof tiny) == CX_ERANGE);
    cx_graph_free(g);
}

TEST_CASE("parse failures set cx_last_error") {
    cx_graph* g = nullptr;
    CHECK(cx_graph_from_graph6("D~", &g) == CX_EPARSE);
    CHECK(g == nullptr);
    CHECK(std::strlen(cx_last_error()) > 0);
    CHECK(cx_graph_from_graph6(nullptr, &g) == CX_EINVAL);
}

TEST_CASE("family build and stats") {
    cx_graph* g = nullptr;
    REQUIRE(cx_family_build("W:n=12,k=2,c=10", &g) == CX_OK);
    cx_stats st;
    REQUIRE(cx_graph_stats(g, &st) == CX_OK);
    CHECK(st.n == 12);
    CHECK(st.edges == 42);
    CHECK(st.min_degree == 2);
    CHECK(st.circumference == 10);
    CHECK(st.clique_number == 9);
    CHECK(st.two_connected == 1);
    CHECK(st.bondy_inside == 38);
    CHECK(st.bondy_crossing == 4);
    cx_graph_free(g);

    cx_graph* bad = nullptr;
    CHECK(cx_family_build("Z:n=13,k=3,c=10", &bad) == CX_EPARSE);
    CHECK(bad == nullptr);
    CHECK(cx_family_build("W:n=12", &bad) == CX_EPARSE);
}

TEST_CASE("stats of an acyclic graph") {
    cx_graph* g = nullptr;
    REQUIRE(cx_graph_from_graph6("DhG", &g) == CX_OK);  /* a tree on 5 vertices */
    cx_stats st;
    REQUIRE(cx_graph_stats(g, &st) == CX_OK);
    CHECK(st.circumference == 2);
    CHECK(st.bondy_inside == -1);
    CHECK(st.bondy_crossing == -1);
    cx_graph_free(g);
}

TEST_CASE("k-closure through the C interface") {
    cx_graph* g = nullptr;
    // K5 minus an edge
    REQUIRE(cx_graph_from_graph6("D^{", &g) == CX_OK);
    cx_stats before;
    cx_graph_stats(g, &before);
    REQUIRE(before.n == 5);
    REQUIRE(before.edges == 9);

    cx_graph* closed = nullptr;
    REQUIRE(cx_k_closure(g, 5, &closed) == CX_OK);
    cx_stats after;
    cx_graph_stats(closed, &after);
    CHECK(after.edges == 10);
    cx_graph_free(closed);

    int pairs[8];
    size_t count = 0;
    cx_graph* closed2 = nullptr;
    REQUIRE(cx_k_closure_trace(g, 5, &closed2, pairs, 4, &count) == CX_OK);
    REQUIRE(count == 1);
    CHECK(pairs[0] < pairs[1]);
    cx_graph_free(closed2);

    // capacity too small for the trace
    size_t c2 = 0;
    cx_graph* closed3 = nullptr;
    CHECK(cx_k_closure_trace(g, 0, &closed3, pairs, 0, &c2) == CX_ERANGE);
    CHECK(cx_k_closure(g, -1, &closed3) == CX_EINVAL);
    cx_graph_free(g);
}

TEST_CASE("c-closure through the C interface") {
    cx_graph* g = nullptr;
    REQUIRE(cx_family_build("W:n=11,k=2,c=10", &g) == CX_OK);
    cx_graph* closed = nullptr;
    REQUIRE(cx_c_closure(g, &closed) == CX_OK);
    cx_stats st;
    cx_graph_stats(closed, &st);
    CHECK(st.n == 11);
    cx_graph_free(closed);
    cx_graph_free(g);

    // acyclic input is rejected
    cx_graph* tree = nullptr;
    REQUIRE(cx_graph_from_graph6("DhG", &tree) == CX_OK);
    cx_graph* out = nullptr;
    CHECK(cx_c_closure(tree, &out) == CX_EINVAL);
    cx_graph_free(tree);
}

TEST_CASE("sweep lifecycle") {
    int ks[] = {2, 3};
    cx_sweep* s = nullptr;
    REQUIRE(cx_sweep_create("kopylov,main", ks, 2, 0, 42, &s) == CX_OK);

    cx_enum_spec spec;
    spec.n = 6;
    spec.min_degree = 0;
    spec.require_2connected = 1;
    spec.min_circumference = 0;
    spec.max_circumference = -1;
    spec.min_edges = 0;
    REQUIRE(cx_sweep_add_generated(s, &spec) == CX_OK);
    CHECK(cx_sweep_instances(s) == 56);
    CHECK(cx_sweep_counterexamples(s) == 0);

    REQUIRE(cx_sweep_add_graph6(s, "D~{") == CX_OK);
    CHECK(cx_sweep_instances(s) == 57);
    CHECK(cx_sweep_add_graph6(s, "D~") == CX_EPARSE);

    char* text = nullptr;
    REQUIRE(cx_sweep_report_text(s, &text) == CX_OK);
    CHECK(std::string(text).find("seed=42") != std::string::npos);
    CHECK(std::string(text).find("kopylov") != std::string::npos);
    cx_string_free(text);

    char* cex = nullptr;
    REQUIRE(cx_sweep_counterexample_list(s, &cex) == CX_OK);
    CHECK(std::string(cex).empty());
    cx_string_free(cex);
    cx_sweep_free(s);

    // invalid theorem id
    cx_sweep* bad = nullptr;
    CHECK(cx_sweep_create("kopylov,not_a_theorem", ks, 2, 0, 0, &bad) == CX_EINVAL);
    CHECK(bad == nullptr);

    // generation range errors propagate
    cx_sweep* s2 = nullptr;
    REQUIRE(cx_sweep_create("kopylov", ks, 1, 0, 0, &s2) == CX_OK);
    cx_enum_spec huge = spec;
    huge.n = 11;
    CHECK(cx_sweep_add_generated(s2, &huge) == CX_ERANGE);
    cx_sweep_free(s2);
}
