#include "circum.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>

#include "closure.hpp"
#include "cycles.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "structure.hpp"
#include "verify.hpp"

struct cx_graph {
    circum::Graph g;
};

struct cx_sweep {
    circum::Sweep sweep;
};

namespace {

thread_local std::string g_last_error;

cx_status fail(cx_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
cx_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const circum::Graph6Error& e) {
        return fail(CX_EPARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CX_EINVAL, e.what());
    } catch (const std::out_of_range& e) {
        return fail(CX_ERANGE, e.what());
    } catch (const std::exception& e) {
        return fail(CX_EINTERNAL, e.what());
    }
}

cx_status copy_out(const std::string& text, char** out) {
    char* buf = (char*)std::malloc(text.size() + 1);
    if (!buf) return fail(CX_EINTERNAL, "out of memory");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return CX_OK;
}

cx_status require(bool cond, const char* what) {
    return cond ? CX_OK : fail(CX_EINVAL, what);
}

}  // namespace

extern "C" {

const char* cx_last_error(void) { return g_last_error.c_str(); }

cx_status cx_graph_from_graph6(const char* line, cx_graph** out) {
    if (!line || !out) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        *out = new cx_graph{circum::graph6_decode(line)};
        return CX_OK;
    });
}

cx_status cx_graph_to_graph6(const cx_graph* g, char* buf, size_t buflen) {
    if (!g || !buf) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        std::string text = circum::graph6_encode(g->g);
        if (text.size() + 1 > buflen) return fail(CX_ERANGE, "buffer too small");
        std::memcpy(buf, text.c_str(), text.size() + 1);
        return CX_OK;
    });
}

void cx_graph_free(cx_graph* g) { delete g; }

cx_status cx_family_build(const char* spec, cx_graph** out) {
    if (!spec || !out) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        try {
            circum::FamilySpec parsed = circum::parse_family_spec(spec);
            *out = new cx_graph{circum::construct_family(parsed)};
        } catch (const std::invalid_argument& e) {
            // bad spec text or violated family invariant
            return fail(CX_EPARSE, e.what());
        }
        return CX_OK;
    });
}

cx_status cx_graph_stats(const cx_graph* g, cx_stats* out) {
    if (!g || !out) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        const circum::Graph& gr = g->g;
        out->n = gr.order();
        out->edges = gr.edge_count();
        out->min_degree = gr.min_degree();
        out->clique_number = circum::clique_number(gr);
        out->two_connected = gr.order() >= 3 && circum::is_two_connected(gr);
        auto r = circum::circumference_with_witness(gr);
        out->circumference = r.length;
        if (r.witness) {
            circum::EdgeSplit split = circum::bondy_edge_split(gr, *r.witness);
            out->bondy_inside = split.inside;
            out->bondy_crossing = split.crossing_plus_outside;
        } else {
            out->bondy_inside = -1;
            out->bondy_crossing = -1;
        }
        return CX_OK;
    });
}

cx_status cx_k_closure(const cx_graph* g, int threshold, cx_graph** out) {
    if (!g || !out) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        *out = new cx_graph{circum::k_closure(g->g, threshold).first};
        return CX_OK;
    });
}

cx_status cx_k_closure_trace(const cx_graph* g, int threshold, cx_graph** out,
                             int* pairs, size_t pairs_cap, size_t* pair_count) {
    if (!g || !out || !pair_count) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        auto [closed, trace] = circum::k_closure(g->g, threshold);
        *pair_count = trace.added_edges.size();
        if (pairs) {
            if (pairs_cap < trace.added_edges.size() * 2)
                return fail(CX_ERANGE, "pair buffer too small");
            for (size_t i = 0; i < trace.added_edges.size(); ++i) {
                pairs[2 * i] = trace.added_edges[i].first;
                pairs[2 * i + 1] = trace.added_edges[i].second;
            }
        }
        *out = new cx_graph{std::move(closed)};
        return CX_OK;
    });
}

cx_status cx_c_closure(const cx_graph* g, cx_graph** out) {
    if (!g || !out) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        auto witness = circum::find_longest_cycle(g->g);
        cx_status pre = require(witness.has_value(), "graph has no cycle");
        if (pre != CX_OK) return pre;
        *out = new cx_graph{circum::c_closure(g->g, *witness)};
        return CX_OK;
    });
}

cx_status cx_sweep_create(const char* theorems_csv, const int* k_values,
                          size_t k_count, int all_longest_cycles, uint64_t seed,
                          cx_sweep** out) {
    if (!theorems_csv || !out) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        circum::SweepOptions options;
        std::stringstream ss(theorems_csv);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty()) options.theorems.push_back(id);
        cx_status pre = require(!options.theorems.empty(), "no theorem ids given");
        if (pre != CX_OK) return pre;
        if (k_values && k_count > 0)
            options.k_values.assign(k_values, k_values + k_count);
        options.all_longest_cycles = all_longest_cycles != 0;
        options.seed = seed;
        *out = new cx_sweep{circum::Sweep(std::move(options))};
        return CX_OK;
    });
}

cx_status cx_sweep_add_graph6(cx_sweep* s, const char* line) {
    if (!s || !line) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        s->sweep.add(circum::graph6_decode(line));
        return CX_OK;
    });
}

cx_status cx_sweep_add_generated(cx_sweep* s, const cx_enum_spec* spec) {
    if (!s || !spec) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        circum::EnumSpec es;
        es.n = spec->n;
        es.min_degree = spec->min_degree;
        es.require_2connected = spec->require_2connected != 0;
        es.min_circumference = spec->min_circumference;
        es.max_circumference = spec->max_circumference;
        es.min_edges = spec->min_edges;
        circum::generate(es, [&](const circum::Graph& g) { s->sweep.add(g); });
        return CX_OK;
    });
}

long long cx_sweep_instances(const cx_sweep* s) {
    return s ? s->sweep.report().instances : 0;
}

long long cx_sweep_counterexamples(const cx_sweep* s) {
    if (!s) return 0;
    long long total = 0;
    for (const auto& st : s->sweep.report().stats) total += st.counterexamples;
    return total;
}

cx_status cx_sweep_report_text(const cx_sweep* s, char** out) {
    if (!s || !out) return fail(CX_EINVAL, "null argument");
    return guarded([&] { return copy_out(s->sweep.report().text(), out); });
}

cx_status cx_sweep_counterexample_list(const cx_sweep* s, char** out) {
    if (!s || !out) return fail(CX_EINVAL, "null argument");
    return guarded([&] {
        std::ostringstream os;
        for (const auto& st : s->sweep.report().stats)
            for (const auto& g6 : st.counterexample_graph6)
                os << g6 << "\n";
        return copy_out(os.str(), out);
    });
}

void cx_sweep_free(cx_sweep* s) { delete s; }

void cx_string_free(char* s) { std::free(s); }

}  // extern "C"
