#include "canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace circum {

namespace {

constexpr std::uint64_t kMix = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

void refine(const Graph& g, std::vector<std::uint64_t>& col) {
    int n = g.order();
    std::vector<std::uint64_t> next(n);
    size_t classes = 0;
    for (int round = 0; round < n; ++round) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t acc = 0;
            for (int u : bits(g.neighbors(v))) acc += mix(col[u] + kMix);
            next[v] = mix(col[v] * 0x100000001b3ULL + acc);
        }
        col = next;
        std::vector<std::uint64_t> sorted = col;
        std::sort(sorted.begin(), sorted.end());
        size_t c = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
        if (c == classes) break;
        classes = c;
    }
}

std::uint64_t cert_of(const Graph& g, const std::vector<int>& order) {
    int n = g.order();
    std::uint64_t cert = 0;
    int bitpos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bitpos)
            if (g.has_edge(order[i], order[j])) cert |= std::uint64_t{1} << bitpos;
    return cert | (std::uint64_t(n) << 55);
}

struct Search {
    const Graph& g;
    bool have = false;
    std::uint64_t best = 0;
    std::vector<int> best_order;

    void consider(std::vector<int> order) {
        std::uint64_t cert = cert_of(g, order);
        if (!have || cert < best) {
            have = true;
            best = cert;
            best_order = std::move(order);
        }
    }

    // vertices sorted by color (ties by label); used when the partition is
    // discrete or uniform
    std::vector<int> color_order(const std::vector<std::uint64_t>& col) const {
        std::vector<int> order(g.order());
        for (int v = 0; v < g.order(); ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return col[a] < col[b]; });
        return order;
    }

    bool uniform(const std::vector<std::vector<int>>& cells) const {
        for (auto& cell : cells) {
            VertexSet cm = 0;
            for (int v : cell) cm |= bit(v);
            for (int v : cell) {
                int d = popcount(g.neighbors(v) & cm);
                if (d != 0 && d != (int)cell.size() - 1) return false;
            }
        }
        for (size_t a = 0; a < cells.size(); ++a) {
            for (size_t b = a + 1; b < cells.size(); ++b) {
                VertexSet bm = 0;
                for (int v : cells[b]) bm |= bit(v);
                int d0 = popcount(g.neighbors(cells[a][0]) & bm);
                if (d0 != 0 && d0 != (int)cells[b].size()) return false;
                for (size_t i = 1; i < cells[a].size(); ++i)
                    if (popcount(g.neighbors(cells[a][i]) & bm) != d0) return false;
            }
        }
        return true;
    }

    void run(std::vector<std::uint64_t> col, int depth) {
        refine(g, col);
        std::vector<std::uint64_t> distinct(col);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<std::vector<int>> cells(distinct.size());
        for (int v = 0; v < g.order(); ++v) {
            size_t c = std::lower_bound(distinct.begin(), distinct.end(), col[v]) -
                       distinct.begin();
            cells[c].push_back(v);
        }
        const std::vector<int>* target = nullptr;
        for (auto& cell : cells)
            if (cell.size() > 1) { target = &cell; break; }
        if (!target || uniform(cells)) {
            consider(color_order(col));
            return;
        }
        for (int v : *target) {
            std::vector<std::uint64_t> col2 = col;
            col2[v] = mix(col2[v] ^ (kMix * (depth + 2)));
            run(std::move(col2), depth + 1);
        }
    }
};

}  // namespace

std::vector<std::uint64_t> wl_colors(const Graph& g, int rounds) {
    int n = g.order();
    std::vector<std::uint64_t> col(n);
    for (int v = 0; v < n; ++v) col[v] = mix(g.degree(v) + 1);
    std::vector<std::uint64_t> next(n);
    for (int r = 0; r < rounds; ++r) {
        for (int v = 0; v < n; ++v) {
            std::uint64_t acc = 0;
            for (int u : bits(g.neighbors(v))) acc += mix(col[u] + kMix);
            next[v] = mix(col[v] * 0x100000001b3ULL + acc);
        }
        col = next;
    }
    return col;
}

CanonResult canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 11) throw std::invalid_argument("canonical_form: n > 11 unsupported");
    Search s{g};
    std::vector<std::uint64_t> col(n);
    for (int v = 0; v < n; ++v) col[v] = mix(g.degree(v) + 1);
    s.run(std::move(col), 0);
    CanonResult res;
    res.order = std::move(s.best_order);
    res.pos.assign(n, 0);
    for (int i = 0; i < n; ++i) res.pos[res.order[i]] = i;
    res.cert = s.best;
    return res;
}

std::uint64_t canonical_cert(const Graph& g) { return canonical_form(g).cert; }

}  // namespace circum
