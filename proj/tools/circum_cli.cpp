// circum: construct extremal families, compute cycle statistics, apply
// closures, and sweep theorem checks over graph streams.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circum.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitError);
}

void check(cx_status st) {
    if (st != CX_OK) die(cx_last_error());
}

std::string encode(const cx_graph* g) {
    char buf[512];
    check(cx_graph_to_graph6(g, buf, sizeof buf));
    return buf;
}

std::string stats_line(const cx_graph* g) {
    cx_stats st;
    check(cx_graph_stats(g, &st));
    std::string line = "n=" + std::to_string(st.n) + " e=" + std::to_string(st.edges) +
                       " delta=" + std::to_string(st.min_degree) +
                       " c=" + std::to_string(st.circumference) +
                       " omega=" + std::to_string(st.clique_number) +
                       " 2conn=" + (st.two_connected ? "yes" : "no");
    if (st.bondy_inside >= 0)
        line += " inside=" + std::to_string(st.bondy_inside) +
                " crossing=" + std::to_string(st.bondy_crossing);
    return line;
}

// "A" or "A..B" inclusive
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        die("bad range '" + text + "' (expected A or A..B)");
    }
}

int parse_gen(const std::string& text) {
    if (text.rfind("n=", 0) != 0) die("--gen expects n=<int>");
    try {
        return std::stoi(text.substr(2));
    } catch (const std::exception&) {
        die("--gen expects n=<int>");
    }
}

int run_family(const std::string& spec, bool with_stats) {
    cx_graph* g = nullptr;
    check(cx_family_build(spec.c_str(), &g));
    std::cout << encode(g) << "\n";
    if (with_stats) std::cout << stats_line(g) << "\n";
    cx_graph_free(g);
    return kExitOk;
}

int run_stats() {
    std::string line;
    long long lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        if (line.empty()) continue;
        cx_graph* g = nullptr;
        if (cx_graph_from_graph6(line.c_str(), &g) != CX_OK)
            die("line " + std::to_string(lineno) + ": " + cx_last_error());
        std::cout << stats_line(g) << "\n";
        cx_graph_free(g);
    }
    return kExitOk;
}

int run_closure(const std::string& mode, int threshold, bool trace) {
    if (mode != "k" && mode != "c") die("--mode must be k or c");
    if (mode == "k" && threshold < 0) die("mode k requires --threshold");
    std::string line;
    long long lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        if (line.empty()) continue;
        cx_graph* g = nullptr;
        if (cx_graph_from_graph6(line.c_str(), &g) != CX_OK)
            die("line " + std::to_string(lineno) + ": " + cx_last_error());
        cx_graph* closed = nullptr;
        if (mode == "k") {
            if (trace) {
                std::vector<int> pairs(1024);
                size_t count = 0;
                check(cx_k_closure_trace(g, threshold, &closed, pairs.data(),
                                         pairs.size(), &count));
                for (size_t i = 0; i < count; ++i)
                    std::cout << "+ " << pairs[2 * i] << " " << pairs[2 * i + 1]
                              << "\n";
            } else {
                check(cx_k_closure(g, threshold, &closed));
            }
        } else {
            check(cx_c_closure(g, &closed));
        }
        std::cout << encode(closed) << "\n";
        cx_graph_free(closed);
        cx_graph_free(g);
    }
    return kExitOk;
}

int run_verify(const std::string& theorems, const std::string& gen,
               bool use_stdin, const std::string& k_range,
               const std::string& c_range, std::uint64_t seed, int jobs,
               const std::string& out_path, bool all_longest) {
    if (jobs < 1) die("--jobs must be >= 1");
    if (gen.empty() == !use_stdin) die("choose exactly one of --gen and --stdin");

    std::vector<int> ks;
    auto [klo, khi] = parse_range(k_range);
    for (int k = klo; k <= khi; ++k) ks.push_back(k);
    if (ks.empty()) die("empty --k range");

    cx_sweep* sweep = nullptr;
    check(cx_sweep_create(theorems.c_str(), ks.data(), ks.size(),
                          all_longest ? 1 : 0, seed, &sweep));

    if (!gen.empty()) {
        cx_enum_spec spec{};
        spec.n = parse_gen(gen);
        spec.max_circumference = -1;
        if (!c_range.empty()) {
            auto [clo, chi] = parse_range(c_range);
            spec.min_circumference = clo;
            spec.max_circumference = chi;
        }
        check(cx_sweep_add_generated(sweep, &spec));
    } else {
        std::string line;
        long long lineno = 0;
        while (std::getline(std::cin, line)) {
            ++lineno;
            if (line.empty()) continue;
            if (cx_sweep_add_graph6(sweep, line.c_str()) != CX_OK)
                die("line " + std::to_string(lineno) + ": " + cx_last_error());
        }
    }

    char* text = nullptr;
    check(cx_sweep_report_text(sweep, &text));
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) die("cannot write " + out_path);
        out << text;
        char* cex = nullptr;
        check(cx_sweep_counterexample_list(sweep, &cex));
        if (*cex) out << cex;
        cx_string_free(cex);
    }
    cx_string_free(text);

    long long bad = cx_sweep_counterexamples(sweep);
    cx_sweep_free(sweep);
    return bad > 0 ? kExitCounterexample : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circumference toolkit"};
    app.require_subcommand(1);

    std::string family_spec;
    bool family_stats = false;
    auto* family = app.add_subcommand("family", "construct a family member");
    family->add_option("spec", family_spec, "e.g. W:n=12,k=2,c=10")->required();
    family->add_flag("--stats", family_stats, "append metrics");

    auto* stats = app.add_subcommand("stats", "metrics for graph6 lines on stdin");
    (void)stats;

    std::string closure_mode = "k";
    int closure_threshold = -1;
    bool closure_trace = false;
    auto* closure = app.add_subcommand("closure", "close graph6 lines on stdin");
    closure->add_option("--mode", closure_mode, "k or c")->required();
    closure->add_option("--threshold", closure_threshold, "degree-sum threshold");
    closure->add_flag("--trace", closure_trace, "print added edges");

    std::string theorems, gen, k_range = "2", c_range, out_path;
    bool use_stdin = false, all_longest = false;
    std::uint64_t seed = 0;
    int jobs = 1;
    auto* verify = app.add_subcommand("verify", "sweep theorem checks");
    verify->add_option("--theorem", theorems, "comma-separated theorem ids")
        ->required();
    verify->add_option("--gen", gen, "built-in generator, n=<int>");
    verify->add_flag("--stdin", use_stdin, "read graph6 from stdin");
    verify->add_option("--k", k_range, "k value or range A..B");
    verify->add_option("--c", c_range, "circumference filter, value or A..B");
    verify->add_option("--seed", seed, "recorded in the report");
    verify->add_option("--jobs", jobs, "worker count");
    verify->add_option("--out", out_path, "also write the report here");
    verify->add_flag("--all-longest-cycles", all_longest,
                     "check every longest cycle (small n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    if (family->parsed()) return run_family(family_spec, family_stats);
    if (stats->parsed()) return run_stats();
    if (closure->parsed())
        return run_closure(closure_mode, closure_threshold, closure_trace);
    return run_verify(theorems, gen, use_stdin, k_range, c_range, seed, jobs,
                      out_path, all_longest);
}
