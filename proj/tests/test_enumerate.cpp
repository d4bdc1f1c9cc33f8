#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "canon.hpp"
#include "cycles.hpp"
#include "enumerate.hpp"
#include "helpers.hpp"

using namespace circum;
using namespace circum::testutil;

namespace {

// labeled brute force: count isomorphism classes of connected graphs on n
// vertices passing the filters, via pairwise isomorphism tests
std::vector<Graph> brute_classes(int n, const EnumSpec& spec) {
    std::vector<Graph> reps;
    for_each_labeled_graph(n, [&](const Graph& g) {
        if (!is_connected(g)) return;
        if (!passes_filters(g, spec)) return;
        for (const Graph& r : reps)
            if (is_isomorphic(g, r)) return;
        reps.push_back(g);
    });
    return reps;
}

}  // namespace

TEST_CASE("generate matches known connected counts") {
    const long long expect[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        EnumSpec spec;
        spec.n = n;
        long long count = 0;
        generate(spec, [&](const Graph&) { ++count; });
        CHECK(count == expect[n]);
    }
}

TEST_CASE("generate matches known 2-connected counts") {
    const long long expect[] = {0, 0, 0, 1, 3, 10, 56, 468, 7123};
    for (int n = 3; n <= 8; ++n) {
        EnumSpec spec;
        spec.n = n;
        spec.require_2connected = true;
        long long count = 0;
        generate(spec, [&](const Graph& g) {
            CHECK(is_two_connected(g));
            ++count;
        });
        CHECK(count == expect[n]);
    }
}

TEST_CASE("generate agrees with the labeled brute-force oracle") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<EnumSpec> specs(4);
        for (auto& s : specs) s.n = n;
        specs[1].min_degree = 2;
        specs[2].require_2connected = true;
        specs[2].min_edges = n + 1;
        specs[3].min_circumference = 4;
        specs[3].max_circumference = n > 4 ? n - 1 : 4;
        for (const auto& spec : specs) {
            auto oracle = brute_classes(n, spec);
            auto got = generate_all(spec);
            CHECK(got.size() == oracle.size());
            // pairwise non-isomorphic and each matches an oracle class
            std::set<std::uint64_t> certs;
            for (const Graph& g : got) {
                CHECK(is_connected(g));
                CHECK(passes_filters(g, spec));
                CHECK(certs.insert(canonical_cert(g)).second);
            }
        }
    }
}

TEST_CASE("generate rejects out-of-range orders") {
    EnumSpec spec;
    spec.n = 0;
    CHECK_THROWS_AS(generate_all(spec), std::out_of_range);
    spec.n = 11;
    CHECK_THROWS_AS(generate_all(spec), std::out_of_range);
}

TEST_CASE("passes_filters") {
    EnumSpec spec;
    spec.n = 5;
    spec.min_degree = 2;
    spec.min_circumference = 4;
    CHECK(passes_filters(cycle_graph(5), spec));
    CHECK(!passes_filters(path_graph(5), spec));
    spec.max_circumference = 4;
    CHECK(!passes_filters(cycle_graph(5), spec));
    CHECK(!passes_filters(complete_graph(5), spec));
    spec.max_circumference = -1;
    spec.min_edges = 9;
    CHECK(!passes_filters(cycle_graph(5), spec));
    CHECK(passes_filters(complete_graph(5), spec));
}

TEST_CASE("ingest_graph6 happy path with filters") {
    std::stringstream in;
    in << graph6_encode(cycle_graph(5)) << "\n";
    in << graph6_encode(path_graph(5)) << "\n";
    in << graph6_encode(complete_graph(4)) << "\n";
    in << "\n";  // blank lines are skipped
    in << ">>graph6<<" << graph6_encode(cycle_graph(4)) << "\n";
    EnumSpec filters;
    filters.min_circumference = 4;
    std::vector<Graph> got;
    auto stats = ingest_graph6(in, filters, true, [&](const Graph& g) {
        got.push_back(g);
    });
    CHECK(stats.lines == 5);
    CHECK(stats.emitted == 3);
    CHECK(stats.errors.empty());
    REQUIRE(got.size() == 3);
    CHECK(got[0] == cycle_graph(5));
    CHECK(got[1] == complete_graph(4));
    CHECK(got[2] == cycle_graph(4));
}

TEST_CASE("ingest_graph6 error handling") {
    std::stringstream bad("D~{\nD~\nC~\n");
    EnumSpec none;
    // non-strict: record and continue
    std::vector<Graph> got;
    auto stats = ingest_graph6(bad, none, false, [&](const Graph& g) {
        got.push_back(g);
    });
    CHECK(stats.lines == 3);
    CHECK(stats.emitted == 2);
    REQUIRE(stats.errors.size() == 1);
    CHECK(stats.errors[0].line == 2);

    // strict: throw, naming the line
    std::stringstream bad2("D~{\nD~\nC~\n");
    try {
        ingest_graph6(bad2, none, true, [](const Graph&) {});
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("generated graphs survive a graph6 round trip") {
    EnumSpec spec;
    spec.n = 7;
    spec.require_2connected = true;
    for (const Graph& g : generate_all(spec))
        CHECK(graph6_decode(graph6_encode(g)) == g);
}

TEST_CASE("circumference histogram for 2-connected n=7") {
    // cross-module consistency: per-circumference class counts add up
    EnumSpec spec;
    spec.n = 7;
    spec.require_2connected = true;
    std::map<int, int> hist;
    generate(spec, [&](const Graph& g) { ++hist[circumference(g)]; });
    long long total = 0;
    for (auto [c, cnt] : hist) total += cnt;
    CHECK(total == 468);
    for (auto [c, cnt] : hist) {
        EnumSpec sub = spec;
        sub.min_circumference = c;
        sub.max_circumference = c;
        CHECK((long long)generate_all(sub).size() == cnt);
    }
}
