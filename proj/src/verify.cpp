#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "closure.hpp"
#include "families.hpp"
#include "structure.hpp"

namespace circum {

namespace {

struct Ctx {
    const Graph& g;
    int n;
    int e;
    int mindeg;
    bool two_conn;
    int c;
    std::optional<CycleWitness> longest;
};

Ctx make_ctx(const Graph& g) {
    Ctx ctx{g, g.order(), g.edge_count(), g.min_degree(), false, 0, std::nullopt};
    ctx.two_conn = ctx.n >= 3 && is_two_connected(g);
    auto r = circumference_with_witness(g);
    ctx.c = r.length;
    ctx.longest = std::move(r.witness);
    return ctx;
}

bool iso_to(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() &&
           is_isomorphic(a, b);
}

bool z_valid(int n, int k, int c) {
    FamilySpec s;
    s.tag = FamilySpec::Z;
    s.n = n; s.k = k; s.c = c;
    try {
        validate_family_spec(s);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

VerdictRecord base_record(const Ctx& ctx, const std::string& theorem, int k = -1) {
    VerdictRecord rec;
    rec.graph6 = graph6_encode(ctx.g);
    rec.theorem = theorem;
    rec.k = k;
    return rec;
}

VerdictRecord eg_impl(const Ctx& ctx) {
    VerdictRecord rec = base_record(ctx, "erdos_gallai");
    rec.hypothesis = true;
    long long lhs = 2LL * ctx.e;
    long long rhs = (long long)ctx.c * (ctx.n - 1);
    rec.conclusion = lhs <= rhs;
    rec.equality = lhs == rhs;
    return rec;
}

VerdictRecord bondy_impl(const Ctx& ctx, const CycleWitness* witness) {
    VerdictRecord rec = base_record(ctx, "bondy");
    if (!witness) witness = ctx.longest ? &*ctx.longest : nullptr;
    if (!witness) return rec;  // acyclic: no cycle to measure against
    rec.hypothesis = true;
    int c = witness->length();
    EdgeSplit split = bondy_edge_split(ctx.g, *witness);
    long long cross = split.crossing_plus_outside;
    rec.conclusion = 2 * cross <= (long long)c * (ctx.n - c);
    if (ctx.two_conn) {
        long long refined = (long long)(c / 2) * (ctx.n - c);
        rec.conclusion = rec.conclusion && cross <= refined;
        rec.equality = cross == refined;
    } else {
        rec.equality = 2 * cross == (long long)c * (ctx.n - c);
    }
    return rec;
}

VerdictRecord kopylov_impl(const Ctx& ctx) {
    VerdictRecord rec = base_record(ctx, "kopylov");
    rec.hypothesis = ctx.two_conn && ctx.c <= ctx.n - 1;
    if (!rec.hypothesis) return rec;
    long long bound = std::max(f_bound(ctx.n, 2, ctx.c),
                               f_bound(ctx.n, ctx.c / 2, ctx.c));
    rec.conclusion = ctx.e <= bound;
    rec.equality = ctx.e == bound;
    if (rec.equality) {
        // the equality characterization is part of the statement
        bool extremal = iso_to(ctx.g, construct_W(ctx.n, 2, ctx.c)) ||
                        iso_to(ctx.g, construct_W(ctx.n, ctx.c / 2, ctx.c));
        rec.conclusion = rec.conclusion && extremal;
        rec.witness = extremal ? "extremal W" : "equality without W form";
    }
    return rec;
}

VerdictRecord erdos62_impl(const Ctx& ctx, int k) {
    VerdictRecord rec = base_record(ctx, "erdos_1962", k);
    rec.hypothesis = ctx.n >= 3 && ctx.c < ctx.n && ctx.mindeg >= k && k >= 1 &&
                     2 * k <= ctx.n - 1;
    if (!rec.hypothesis) return rec;
    long long bound = std::max(f_bound(ctx.n, k, ctx.n - 1),
                               f_bound(ctx.n, (ctx.n - 1) / 2, ctx.n - 1));
    rec.conclusion = ctx.e <= bound;
    rec.equality = ctx.e == bound;
    return rec;
}

bool main_range(const Ctx& ctx) {
    return ctx.c <= ctx.n - 1 && (ctx.c == 8 || ctx.c >= 10);
}

bool main_hyp(const Ctx& ctx, int k, long long low_k, long long high_k) {
    if (!ctx.two_conn || ctx.mindeg < k || k < 1) return false;
    if (!main_range(ctx)) return false;
    if (ctx.c < 2 * k) return false;  // impossible under the hypothesis (Dirac)
    long long threshold = std::max(f_bound(ctx.n, low_k, ctx.c),
                                   f_bound(ctx.n, high_k, ctx.c));
    return ctx.e > threshold;
}

bool xy_clause(const Ctx& ctx) {
    return ctx.c % 2 == 1 && xy_membership(ctx.g, ctx.c).kind != XYVerdict::Neither;
}

VerdictRecord main_impl(const Ctx& ctx, int k) {
    VerdictRecord rec = base_record(ctx, "main", k);
    rec.hypothesis = main_hyp(ctx, k, k + 1, ctx.c / 2 - 1);
    if (!rec.hypothesis) return rec;
    int c = ctx.c;
    if (is_subgraph_of_W(ctx.g, k, c)) {
        rec.conclusion = true;
        rec.witness = "W_k";
    } else if (is_subgraph_of_W(ctx.g, c / 2, c)) {
        rec.conclusion = true;
        rec.witness = "W_half";
    } else if (k == 2 && xy_clause(ctx)) {
        rec.conclusion = true;
        rec.witness = "XY";
    } else if (k >= 3 && z_valid(ctx.n, k, c) && is_subgraph_of_Z(ctx.g, k, c)) {
        rec.conclusion = true;
        rec.witness = "Z";
    }
    return rec;
}

VerdictRecord refined_impl(const Ctx& ctx, int k, const CycleWitness* witness) {
    VerdictRecord rec = base_record(ctx, "refined", k);
    rec.hypothesis = main_hyp(ctx, k, k + 1, ctx.c / 2 - 1) && ctx.longest;
    if (!rec.hypothesis) return rec;
    if (!witness) witness = &*ctx.longest;
    int c = ctx.c;
    Graph closed = c_closure(ctx.g, *witness);
    if (iso_to(closed, construct_W(ctx.n, k, c))) {
        rec.conclusion = true;
        rec.witness = "closure W_k";
    } else if (is_subgraph_of_W(ctx.g, c / 2, c)) {
        rec.conclusion = true;
        rec.witness = "W_half";
    } else if (k == 2 && xy_clause(ctx)) {
        rec.conclusion = true;
        rec.witness = "XY";
    } else if (k >= 3 && z_valid(ctx.n, k, c) &&
               iso_to(closed, construct_Z(ctx.n, k, c))) {
        rec.conclusion = true;
        rec.witness = "closure Z";
    }
    return rec;
}

VerdictRecord var1_impl(const Ctx& ctx, int k, const CycleWitness* witness) {
    VerdictRecord rec = base_record(ctx, "var1", k);
    rec.hypothesis = ctx.two_conn && ctx.mindeg >= k && k >= 1 && ctx.c >= 10 &&
                     ctx.c <= ctx.n - 1 && ctx.c >= 2 * k && ctx.longest.has_value();
    if (rec.hypothesis) {
        long long threshold = std::max(f_bound(ctx.n, k + 1, ctx.c),
                                       f_bound(ctx.n, ctx.c / 2, ctx.c));
        rec.hypothesis = ctx.e > threshold;
    }
    if (!rec.hypothesis) return rec;
    if (!witness) witness = &*ctx.longest;
    int c = ctx.c;
    Graph closed = c_closure(ctx.g, *witness);
    bool is_w = iso_to(closed, construct_W(ctx.n, k, c));
    bool is_z = !is_w && z_valid(ctx.n, k, c) &&
                iso_to(closed, construct_Z(ctx.n, k, c));
    rec.conclusion = is_w || is_z;
    // the c = n-1 corollary pins the closure to W
    if (c == ctx.n - 1) rec.conclusion = is_w;
    rec.witness = is_w ? "closure W_k" : is_z ? "closure Z" : "";
    return rec;
}

VerdictRecord var2_impl(const Ctx& ctx, int k) {
    VerdictRecord rec = base_record(ctx, "var2", k);
    rec.hypothesis = ctx.two_conn && ctx.mindeg >= k && k >= 1 && ctx.c >= 10 &&
                     ctx.c <= ctx.n - 1 && ctx.c >= 2 * k;
    if (rec.hypothesis) {
        long long threshold = std::max(f_bound(ctx.n, k, ctx.c),
                                       f_bound(ctx.n, ctx.c / 2 - 1, ctx.c));
        rec.hypothesis = ctx.e > threshold;
    }
    if (!rec.hypothesis) return rec;
    if (is_subgraph_of_W(ctx.g, ctx.c / 2, ctx.c)) {
        rec.conclusion = true;
        rec.witness = "W_half";
    } else if (k == 2 && xy_clause(ctx)) {
        rec.conclusion = true;
        rec.witness = "XY";
    }
    return rec;
}

VerdictRecord bondy_stab_impl(const Ctx& ctx, const CycleWitness* witness) {
    VerdictRecord rec = base_record(ctx, "bondy_stability");
    rec.hypothesis =
        ctx.two_conn && ctx.c >= 10 && ctx.c <= ctx.n - 1 && ctx.longest.has_value();
    if (!rec.hypothesis) return rec;
    if (!witness) witness = &*ctx.longest;
    int c = ctx.c;
    EdgeSplit split = bondy_edge_split(ctx.g, *witness);
    rec.hypothesis =
        split.crossing_plus_outside > (long long)(c / 2 - 1) * (ctx.n - c);
    if (!rec.hypothesis) return rec;
    bool structural = false;
    if (is_subgraph_of_W(ctx.g, c / 2, c)) {
        structural = true;
        rec.witness = "W_half";
    } else if (xy_clause(ctx)) {
        structural = true;
        rec.witness = "XY";
    }
    // intermediate step: an isolated off-cycle vertex with floor(c/2)
    // neighbors on the cycle
    VertexSet cmask = witness->vertex_mask();
    VertexSet off = ctx.g.vertex_set() & ~cmask;
    bool isolated = false;
    for (int v : bits(off)) {
        if (ctx.g.neighbors(v) & off) continue;
        if (popcount(ctx.g.neighbors(v) & cmask) == c / 2) {
            isolated = true;
            break;
        }
    }
    if (!isolated) rec.witness += " missing isolated vertex";
    rec.conclusion = structural && isolated;
    return rec;
}

VerdictRecord woodall_impl(const Ctx& ctx, int k) {
    VerdictRecord rec = base_record(ctx, "woodall", k);
    rec.hypothesis = ctx.two_conn && ctx.mindeg >= k && k >= 1 && ctx.c <= ctx.n - 1 &&
                     ctx.c >= 2 * k;
    if (!rec.hypothesis) return rec;
    long long bound = std::max(f_bound(ctx.n, k, ctx.c),
                               f_bound(ctx.n, ctx.c / 2, ctx.c));
    rec.conclusion = ctx.e <= bound;
    rec.equality = ctx.e == bound;
    return rec;
}

template <typename Fn>
VerdictRecord timed(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    VerdictRecord rec = fn();
    rec.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    return rec;
}

}  // namespace

VerdictRecord check_erdos_gallai(const Graph& g) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return eg_impl(ctx); });
}
VerdictRecord check_bondy(const Graph& g) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return bondy_impl(ctx, nullptr); });
}
VerdictRecord check_kopylov(const Graph& g) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return kopylov_impl(ctx); });
}
VerdictRecord check_erdos_1962(const Graph& g, int k) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return erdos62_impl(ctx, k); });
}
VerdictRecord check_main(const Graph& g, int k) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return main_impl(ctx, k); });
}
VerdictRecord check_refined(const Graph& g, int k) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return refined_impl(ctx, k, nullptr); });
}
VerdictRecord check_var1(const Graph& g, int k) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return var1_impl(ctx, k, nullptr); });
}
VerdictRecord check_var2(const Graph& g, int k) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return var2_impl(ctx, k); });
}
VerdictRecord check_bondy_stability(const Graph& g) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return bondy_stab_impl(ctx, nullptr); });
}
VerdictRecord check_woodall(const Graph& g, int k) {
    Ctx ctx = make_ctx(g);
    return timed([&] { return woodall_impl(ctx, k); });
}

const std::vector<std::string> kTheoremIds = {
    "erdos_gallai", "bondy",   "kopylov", "erdos_1962",      "main",
    "refined",      "var1",    "var2",    "bondy_stability", "woodall"};

bool theorem_takes_k(const std::string& id) {
    return id == "erdos_1962" || id == "main" || id == "refined" || id == "var1" ||
           id == "var2" || id == "woodall";
}

Sweep::Sweep(SweepOptions options) : options_(std::move(options)) {
    report_.seed = options_.seed;
    for (const auto& id : options_.theorems) {
        if (std::find(kTheoremIds.begin(), kTheoremIds.end(), id) ==
            kTheoremIds.end())
            throw std::invalid_argument("unknown theorem id: " + id);
        if (theorem_takes_k(id)) {
            for (int k : options_.k_values) {
                TheoremStats st;
                st.theorem = id;
                st.k = k;
                report_.stats.push_back(st);
            }
        } else {
            TheoremStats st;
            st.theorem = id;
            report_.stats.push_back(st);
        }
    }
}

namespace {

void fold(TheoremStats& st, const VerdictRecord& rec, int max_stored) {
    ++st.total;
    if (!rec.hypothesis) return;
    ++st.hypothesis_met;
    if (rec.conclusion) {
        ++st.conclusion_met;
    } else {
        ++st.counterexamples;
        if ((int)st.counterexample_graph6.size() < max_stored)
            st.counterexample_graph6.push_back(rec.graph6);
    }
    if (rec.equality) {
        ++st.equality_count;
        if ((int)st.extremal_graph6.size() < max_stored)
            st.extremal_graph6.push_back(rec.graph6);
    }
}

bool witness_dependent(const std::string& id) {
    return id == "bondy" || id == "refined" || id == "var1" ||
           id == "bondy_stability";
}

}  // namespace

void Sweep::add(const Graph& g) {
    ++report_.instances;
    Ctx ctx = make_ctx(g);
    std::vector<CycleWitness> all;
    if (options_.all_longest_cycles && ctx.longest)
        all = all_longest_cycles(g);
    for (auto& st : report_.stats) {
        auto eval = [&](const CycleWitness* w) -> VerdictRecord {
            if (st.theorem == "erdos_gallai") return eg_impl(ctx);
            if (st.theorem == "bondy") return bondy_impl(ctx, w);
            if (st.theorem == "kopylov") return kopylov_impl(ctx);
            if (st.theorem == "erdos_1962") return erdos62_impl(ctx, st.k);
            if (st.theorem == "main") return main_impl(ctx, st.k);
            if (st.theorem == "refined") return refined_impl(ctx, st.k, w);
            if (st.theorem == "var1") return var1_impl(ctx, st.k, w);
            if (st.theorem == "var2") return var2_impl(ctx, st.k);
            if (st.theorem == "bondy_stability") return bondy_stab_impl(ctx, w);
            return woodall_impl(ctx, st.k);
        };
        if (options_.all_longest_cycles && witness_dependent(st.theorem) &&
            !all.empty()) {
            // the statement must hold for every longest cycle
            VerdictRecord merged = eval(&all.front());
            for (size_t i = 1; i < all.size(); ++i) {
                VerdictRecord r = eval(&all[i]);
                merged.hypothesis = merged.hypothesis || r.hypothesis;
                if (r.counterexample()) merged = r;
            }
            fold(st, merged, options_.max_stored);
        } else {
            fold(st, eval(nullptr), options_.max_stored);
        }
    }
}

SweepReport Sweep::report() const { return report_; }

bool SweepReport::has_counterexamples() const {
    for (const auto& st : stats)
        if (st.counterexamples > 0) return true;
    return false;
}

std::string SweepReport::text() const {
    std::ostringstream os;
    os << "sweep seed=" << seed << " instances=" << instances << "\n";
    os << "theorem k total hypothesis conclusion counterexamples equality\n";
    for (const auto& st : stats) {
        os << st.theorem << " ";
        if (st.k >= 0) os << st.k;
        else os << "-";
        os << " " << st.total << " " << st.hypothesis_met << " "
           << st.conclusion_met << " " << st.counterexamples << " "
           << st.equality_count << "\n";
        for (const auto& g6 : st.counterexample_graph6)
            os << "counterexample " << st.theorem << " k=" << st.k << " " << g6
               << "\n";
    }
    return os.str();
}

SweepReport run_sweep(const SweepOptions& options, const std::vector<Graph>& graphs) {
    Sweep sweep(options);
    for (const Graph& g : graphs) sweep.add(g);
    return sweep.report();
}

}  // namespace circum
