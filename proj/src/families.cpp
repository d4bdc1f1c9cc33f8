#include "families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace circum {

namespace {

long long binom2(long long x) { return x * (x - 1) / 2; }

[[noreturn]] void invariant_error(const std::string& what) {
    throw std::invalid_argument("family spec invariant violated: " + what);
}

}  // namespace

long long f_bound(long long n, long long k, long long c) {
    if (c - k + 1 < 0) throw std::invalid_argument("f: c-k+1 < 0");
    return binom2(c - k + 1) + k * (n - c + k - 1);
}

long long h_bound(long long n, long long k) {
    if (n < k) throw std::invalid_argument("h: n < k");
    return binom2(n - k) + k * (k - 1);
}

long long stability_threshold(long long n, long long c, long long a, long long b) {
    if (a > b) throw std::invalid_argument("stability_threshold: empty interval");
    return std::max(f_bound(n, a, c), f_bound(n, b, c));
}

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("family spec: missing ':'");
    std::string tag = text.substr(0, colon);
    FamilySpec spec;
    if (tag == "W") spec.tag = FamilySpec::W;
    else if (tag == "Z") spec.tag = FamilySpec::Z;
    else if (tag == "X") spec.tag = FamilySpec::X;
    else if (tag == "Y") spec.tag = FamilySpec::Y;
    else throw std::invalid_argument("family spec: unknown tag '" + tag + "'");

    bool have_x = false;
    std::stringstream ss(text.substr(colon + 1));
    std::string field;
    while (std::getline(ss, field, ',')) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("family spec: field '" + field + "' has no '='");
        std::string key = field.substr(0, eq);
        std::string val = field.substr(eq + 1);
        if (key == "stars") {
            std::stringstream st(val);
            std::string item;
            while (std::getline(st, item, '+')) {
                if (item.size() < 2 || (item.back() != 'a' && item.back() != 'b'))
                    throw std::invalid_argument("family spec: bad star '" + item + "'");
                int size = std::stoi(item.substr(0, item.size() - 1));
                spec.stars.push_back({size, item.back()});
            }
            continue;
        }
        int num = 0;
        try {
            num = std::stoi(val);
        } catch (const std::exception&) {
            throw std::invalid_argument("family spec: bad number '" + val + "'");
        }
        if (key == "n") spec.n = num;
        else if (key == "k") spec.k = num;
        else if (key == "c") spec.c = num;
        else if (key == "b") spec.b_size = num;
        else if (key == "x") { spec.x_size = num; have_x = true; }
        else throw std::invalid_argument("family spec: unknown key '" + key + "'");
    }
    if (spec.tag == FamilySpec::X && !have_x)
        spec.x_size = spec.n - spec.c / 2 - spec.b_size;
    validate_family_spec(spec);
    return spec;
}

void validate_family_spec(const FamilySpec& spec) {
    int n = spec.n, k = spec.k, c = spec.c;
    switch (spec.tag) {
        case FamilySpec::W:
            if (k < 1) invariant_error("W requires k >= 1");
            if (c < 2 * k) invariant_error("W requires c >= 2k");
            if (n < c + 1) invariant_error("W requires n >= c+1");
            break;
        case FamilySpec::Z: {
            if (k < 2) invariant_error("Z requires k >= 2");
            if (c < 2 * k) invariant_error("Z requires c >= 2k");
            int extra = n - (c - k + 1);
            if (extra <= 0) invariant_error("Z requires n > c-k+1");
            if (extra % (k - 1) != 0)
                invariant_error("Z requires (n-(c-k+1)) divisible by (k-1): " +
                                std::to_string(extra) + " not divisible by " +
                                std::to_string(k - 1));
            break;
        }
        case FamilySpec::X:
            if (c % 2 == 0) invariant_error("X requires odd c");
            if (spec.b_size < 1) invariant_error("X requires |B| >= 1");
            if (spec.x_size < 0) invariant_error("X requires |X| >= 0");
            if (c / 2 + spec.b_size + spec.x_size != n)
                invariant_error("X requires |A|+|B|+|X| = n");
            break;
        case FamilySpec::Y: {
            if (c % 2 == 0) invariant_error("Y requires odd c");
            if (spec.stars.size() < 2) invariant_error("Y requires at least two stars");
            int total = 0;
            for (auto& s : spec.stars) {
                if (s.size < 2) invariant_error("Y requires every star size >= 2");
                if (s.attach != 'a' && s.attach != 'b')
                    invariant_error("Y star attachment must be 'a' or 'b'");
                total += s.size;
            }
            if (c / 2 < 2) invariant_error("Y requires |A| >= 2");
            if (c / 2 + total > n) invariant_error("Y star sizes exceed n - |A|");
            break;
        }
    }
    if (n > kMaxVertices) invariant_error("n > 64 unsupported");
}

Graph construct_family(const FamilySpec& spec) {
    validate_family_spec(spec);
    int n = spec.n, k = spec.k, c = spec.c;
    Graph g(n);
    switch (spec.tag) {
        case FamilySpec::W: {
            int clique = c - k + 1;
            for (int i = 0; i < clique; ++i)
                for (int j = i + 1; j < clique; ++j) g.add_edge(i, j);
            for (int v = clique; v < n; ++v)
                for (int a = 0; a < k; ++a) g.add_edge(v, a);
            break;
        }
        case FamilySpec::Z: {
            int clique = c - k + 1;
            for (int i = 0; i < clique; ++i)
                for (int j = i + 1; j < clique; ++j) g.add_edge(i, j);
            int groups = (n - clique) / (k - 1);
            for (int t = 0; t < groups; ++t) {
                int base = clique + t * (k - 1);
                for (int i = 0; i < k - 1; ++i) {
                    g.add_edge(base + i, 0);
                    g.add_edge(base + i, 1);
                    for (int j = i + 1; j < k - 1; ++j) g.add_edge(base + i, base + j);
                }
            }
            break;
        }
        case FamilySpec::X: {
            int alpha = c / 2;
            for (int i = 0; i < alpha; ++i)
                for (int j = i + 1; j < alpha; ++j) g.add_edge(i, j);
            for (int v = alpha; v < alpha + spec.b_size; ++v)
                for (int a = 0; a < alpha; ++a) g.add_edge(v, a);
            int bvert = alpha;  // designated b; designated a is vertex 0
            for (int v = alpha + spec.b_size; v < n; ++v) {
                g.add_edge(v, 0);
                g.add_edge(v, bvert);
            }
            break;
        }
        case FamilySpec::Y: {
            int alpha = c / 2;
            for (int i = 0; i < alpha; ++i)
                for (int j = i + 1; j < alpha; ++j) g.add_edge(i, j);
            int total_star = 0;
            for (auto& s : spec.stars) total_star += s.size;
            int b_count = n - alpha - total_star;
            for (int v = alpha; v < alpha + b_count; ++v)
                for (int a = 0; a < alpha; ++a) g.add_edge(v, a);
            int pos = alpha + b_count;
            for (auto& s : spec.stars) {
                int center = pos;
                int z = s.attach == 'a' ? 0 : 1;
                int w = s.attach == 'a' ? 1 : 0;
                g.add_edge(center, w);
                for (int leaf = pos + 1; leaf < pos + s.size; ++leaf) {
                    g.add_edge(leaf, center);
                    g.add_edge(leaf, z);
                }
                pos += s.size;
            }
            break;
        }
    }
    return g;
}

Graph construct_W(int n, int k, int c) {
    FamilySpec s;
    s.tag = FamilySpec::W;
    s.n = n; s.k = k; s.c = c;
    return construct_family(s);
}

Graph construct_Z(int n, int k, int c) {
    FamilySpec s;
    s.tag = FamilySpec::Z;
    s.n = n; s.k = k; s.c = c;
    return construct_family(s);
}

namespace {

bool w_dfs(const Graph& g, const std::vector<int>& pool, size_t idx, int need,
           int k, VertexSet chosen, VertexSet nbhd, VertexSet* out) {
    if (need == 0) {
        *out = chosen;
        return true;
    }
    if (pool.size() - idx < (size_t)need) return false;
    for (size_t i = idx; i + need <= pool.size(); ++i) {
        int v = pool[i];
        if (nbhd & bit(v)) continue;              // would break stability
        VertexSet nb2 = nbhd | g.neighbors(v);
        nb2 &= ~(chosen | bit(v));
        if (popcount(nb2) > k) continue;
        if (w_dfs(g, pool, i + 1, need - 1, k, chosen | bit(v), nb2, out)) return true;
    }
    return false;
}

}  // namespace

std::optional<VertexSet> w_subgraph_witness(const Graph& g, int k, int c) {
    int n = g.order();
    if (n < c + 1) throw std::invalid_argument("w_subgraph_witness: needs n >= c+1");
    if (k < 1 || c - k + 1 < 1) throw std::invalid_argument("w_subgraph_witness: bad (k,c)");
    int m = n - c + k - 1;
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= k) pool.push_back(v);
    VertexSet d = 0;
    if (w_dfs(g, pool, 0, m, k, 0, 0, &d)) return d;
    return std::nullopt;
}

bool is_subgraph_of_W(const Graph& g, int k, int c) {
    return w_subgraph_witness(g, k, c).has_value();
}

namespace {

bool pack_components(std::vector<int>& sizes, size_t idx, std::vector<int>& caps) {
    if (idx == sizes.size()) return true;
    int s = sizes[idx];
    int last_tried = -1;
    for (auto& cap : caps) {
        if (cap < s || cap == last_tried) continue;
        last_tried = cap;
        cap -= s;
        if (pack_components(sizes, idx + 1, caps)) {
            cap += s;
            return true;
        }
        cap += s;
    }
    return false;
}

}  // namespace

bool is_subgraph_of_Z(const Graph& g, int k, int c) {
    int n = g.order();
    FamilySpec s;
    s.tag = FamilySpec::Z;
    s.n = n; s.k = k; s.c = c;
    validate_family_spec(s);  // throws on invalid Z parameters
    int groups = (n - (c - k + 1)) / (k - 1);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet rest = g.vertex_set() & ~(bit(u) | bit(v));
            std::vector<int> sizes;
            for (VertexSet comp : components(g, rest)) sizes.push_back(popcount(comp));
            std::sort(sizes.rbegin(), sizes.rend());
            std::vector<int> caps(1, c - k - 1);
            caps.insert(caps.end(), groups, k - 1);
            if (pack_components(sizes, 0, caps)) return true;
        }
    }
    return false;
}

bool equals_Z(const Graph& g, int k, int c) {
    Graph z = construct_Z(g.order(), k, c);
    if (g.edge_count() != z.edge_count()) return false;
    return is_isomorphic(g, z);
}

namespace {

// X-shape check for a fixed clique part A. rest-rest edges must form a star
// at some b0 whose rest-neighbors all attach only to b0 and one clique
// vertex a.
bool x_check(const Graph& g, VertexSet A, XYVerdict* out) {
    VertexSet rest = g.vertex_set() & ~A;
    if (!rest) return false;  // |B| >= 1
    std::vector<std::pair<int, int>> rest_edges;
    for (int v : bits(rest))
        for (int w : bits(g.neighbors(v) & rest))
            if (w > v) rest_edges.push_back({v, w});
    auto fill = [&](int a, int b0, VertexSet xs) {
        out->kind = XYVerdict::InX;
        out->clique_part = A;
        out->pendant_part = xs;
        out->stable_part = rest & ~xs;
        out->a = a;
        out->b = b0;
        return true;
    };
    if (rest_edges.empty()) {
        // everything off the clique attaches only into A: all of it fits in B
        return fill(lowest(A), lowest(rest), 0);
    }
    VertexSet cand = bit(rest_edges[0].first) | bit(rest_edges[0].second);
    for (auto [p, q] : rest_edges) cand &= bit(p) | bit(q);
    for (int b0 : bits(cand)) {
        VertexSet xs = g.neighbors(b0) & rest;
        VertexSet u = 0;
        for (int x : bits(xs)) u |= g.neighbors(x) & ~bit(b0);
        if (u & rest) continue;      // an X vertex touches a non-b0 rest vertex
        if (popcount(u) > 1) continue;  // X vertices may share only one clique vertex
        int a = u ? lowest(u) : lowest(A);
        return fill(a, b0, xs);
    }
    return false;
}

struct StarComp {
    VertexSet verts = 0;
    std::vector<int> centers;  // feasible centers (all comp edges incident)
    VertexSet outside = 0;     // union of neighbors outside the comp
};

bool y_check_pair(const Graph& g, VertexSet A, const std::vector<StarComp>& comps,
                  int a, int b, XYVerdict* out) {
    VertexSet rest = g.vertex_set() & ~A;
    VertexSet ab = bit(a) | bit(b);
    VertexSet star_verts = 0;
    for (auto& comp : comps) {
        if (comp.outside & ~ab) return false;
        if (popcount(comp.verts) >= 3) {
            bool ok = false;
            for (int ctr : comp.centers) {
                VertexSet leaf_out = 0;
                for (int v : bits(comp.verts & ~bit(ctr)))
                    leaf_out |= g.neighbors(v) & ~comp.verts;
                if (popcount(leaf_out) <= 1) { ok = true; break; }
            }
            if (!ok) return false;
        }
        star_verts |= comp.verts;
    }
    int stars = (int)comps.size();
    if (stars < 2) {
        // form extra single-edge stars from isolated off-clique vertices whose
        // attachments already sit inside {a,b}
        VertexSet avail = 0;
        for (int v : bits(rest & ~star_verts))
            if (!(g.neighbors(v) & ~ab)) avail |= bit(v);
        int need = 2 * (2 - stars);
        if (popcount(avail) < need) return false;
        for (int v : bits(avail)) {
            if (need == 0) break;
            star_verts |= bit(v);
            --need;
        }
    }
    out->kind = XYVerdict::InY;
    out->clique_part = A;
    out->pendant_part = star_verts;
    out->stable_part = rest & ~star_verts;
    out->a = a;
    out->b = b;
    return true;
}

bool y_check(const Graph& g, VertexSet A, XYVerdict* out) {
    VertexSet rest = g.vertex_set() & ~A;
    std::vector<StarComp> comps;
    VertexSet forced = 0;  // outside-attachments of all star components
    for (VertexSet comp : components(g, rest)) {
        if (popcount(comp) < 2) continue;
        StarComp sc;
        sc.verts = comp;
        for (int v : bits(comp))
            sc.outside |= g.neighbors(v) & ~comp;
        if (sc.outside & rest) return false;  // stars may only attach into A
        // feasible centers: every edge of the component incident to ctr
        for (int ctr : bits(comp)) {
            bool star = true;
            for (int v : bits(comp & ~bit(ctr)))
                if (g.neighbors(v) & comp & ~bit(ctr)) { star = false; break; }
            if (star) sc.centers.push_back(ctr);
        }
        if (sc.centers.empty()) return false;  // component is not a star
        forced |= sc.outside;
        comps.push_back(sc);
    }
    if (popcount(forced) > 2) return false;
    std::vector<std::pair<int, int>> pairs;
    if (popcount(forced) == 2) {
        pairs.push_back({lowest(forced), lowest(forced & (forced - 1))});
    } else if (popcount(forced) == 1) {
        int a = lowest(forced);
        for (int b : bits(A & ~forced)) pairs.push_back({a, b});
    } else {
        for (int a : bits(A))
            for (int b : bits(A & ~full_set(a + 1)))
                pairs.push_back({a, b});
    }
    for (auto [a, b] : pairs)
        if (y_check_pair(g, A, comps, a, b, out)) return true;
    return false;
}

void for_each_subset(int n, int size, const std::function<bool(VertexSet)>& fn) {
    std::function<bool(int, int, VertexSet)> rec = [&](int start, int left,
                                                       VertexSet acc) -> bool {
        if (left == 0) return fn(acc);
        for (int v = start; v <= n - left; ++v)
            if (rec(v + 1, left - 1, acc | bit(v))) return true;
        return false;
    };
    rec(0, size, 0);
}

}  // namespace

XYVerdict xy_membership(const Graph& g, int c) {
    if (c % 2 == 0) throw std::invalid_argument("xy_membership: c must be odd");
    int n = g.order();
    if (n < c) throw std::invalid_argument("xy_membership: needs n >= c");
    int alpha = c / 2;
    XYVerdict verdict;
    for_each_subset(n, alpha, [&](VertexSet A) {
        return x_check(g, A, &verdict);
    });
    if (verdict.kind == XYVerdict::InX) return verdict;
    for_each_subset(n, alpha, [&](VertexSet A) {
        return y_check(g, A, &verdict);
    });
    return verdict;
}

}  // namespace circum
