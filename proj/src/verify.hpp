#ifndef CIRCUM_VERIFY_HPP
#define CIRCUM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycles.hpp"
#include "graph.hpp"

namespace circum {

struct VerdictRecord {
    std::string graph6;
    std::string theorem;
    int k = -1;  // -1 for unparameterized theorems
    bool hypothesis = false;
    bool conclusion = false;  // meaningful only when hypothesis holds
    bool equality = false;    // bound attained (bound-type theorems)
    std::string witness;      // satisfied clause or failure note
    double ms = 0;

    bool counterexample() const { return hypothesis && !conclusion; }
};

VerdictRecord check_erdos_gallai(const Graph& g);
VerdictRecord check_bondy(const Graph& g);
VerdictRecord check_kopylov(const Graph& g);
VerdictRecord check_erdos_1962(const Graph& g, int k);
VerdictRecord check_main(const Graph& g, int k);
VerdictRecord check_refined(const Graph& g, int k);
VerdictRecord check_var1(const Graph& g, int k);
VerdictRecord check_var2(const Graph& g, int k);
VerdictRecord check_bondy_stability(const Graph& g);
VerdictRecord check_woodall(const Graph& g, int k);

extern const std::vector<std::string> kTheoremIds;
bool theorem_takes_k(const std::string& id);

struct SweepOptions {
    std::vector<std::string> theorems;
    std::vector<int> k_values = {2};    // used by k-parameterized theorems
    bool all_longest_cycles = false;    // recheck on every longest cycle
    std::uint64_t seed = 0;             // recorded for reproducibility
    int max_stored = 64;                // cap on persisted instance lists
};

struct TheoremStats {
    std::string theorem;
    int k = -1;
    long long total = 0;
    long long hypothesis_met = 0;
    long long conclusion_met = 0;
    long long counterexamples = 0;
    long long equality_count = 0;
    std::vector<std::string> counterexample_graph6;
    std::vector<std::string> extremal_graph6;
};

struct SweepReport {
    std::vector<TheoremStats> stats;
    std::uint64_t seed = 0;
    long long instances = 0;
    bool has_counterexamples() const;
    std::string text() const;  // deterministic summary table
};

class Sweep {
public:
    explicit Sweep(SweepOptions options);
    void add(const Graph& g);
    SweepReport report() const;

private:
    SweepOptions options_;
    SweepReport report_;
};

SweepReport run_sweep(const SweepOptions& options, const std::vector<Graph>& graphs);

}  // namespace circum

#endif
