#include "gturan/counting.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gturan {

namespace {

struct CountingEmbedder {
    const Graph* host;
    const Graph* pat;
    std::vector<int> order;
    std::vector<std::vector<int>> placed_nbrs;
    std::vector<int> assignment;
    std::vector<uint8_t> used;
    copy_count_t count = 0;

    explicit CountingEmbedder(const Graph& h, const Graph& g) : host(&g), pat(&h) {
        const int k = pat->n();
        std::vector<uint8_t> taken(k, 0);
        for (int step = 0; step < k; ++step) {
            int bestv = -1, best_attach = -1, best_deg = -1;
            for (int v = 0; v < k; ++v) {
                if (taken[v]) continue;
                int attach = 0;
                for (int u : order)
                    if (pat->has_edge(u, v)) ++attach;
                int deg = pat->degree(v);
                if (attach > best_attach || (attach == best_attach && deg > best_deg)) {
                    bestv = v;
                    best_attach = attach;
                    best_deg = deg;
                }
            }
            taken[bestv] = 1;
            order.push_back(bestv);
        }
        placed_nbrs.assign(k, {});
        for (int step = 0; step < k; ++step)
            for (int j = 0; j < step; ++j)
                if (pat->has_edge(order[j], order[step])) placed_nbrs[step].push_back(j);
        assignment.assign(k, -1);
        used.assign(host->n(), 0);
    }

    void place(int step) {
        if (step == pat->n()) {
            ++count;
            return;
        }
        const int pv = order[step];
        const int pdeg = pat->degree(pv);
        for (int hv = 0; hv < host->n(); ++hv) {
            if (used[hv] || host->degree(hv) < pdeg) continue;
            bool ok = true;
            for (int j : placed_nbrs[step])
                if (!host->has_edge(assignment[order[j]], hv)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[hv] = 1;
            assignment[pv] = hv;
            place(step + 1);
            assignment[pv] = -1;
            used[hv] = 0;
        }
    }
};

} // namespace

copy_count_t count_embeddings(const Graph& h, const Graph& g) {
    if (h.n() > 8) throw std::invalid_argument("pattern too large");
    if (h.n() > g.n()) return 0;
    CountingEmbedder e(h, g);
    e.place(0);
    return e.count;
}

uint64_t automorphism_order(const Graph& h) {
    if (h.n() > 8) throw std::invalid_argument("pattern too large");
    const int n = h.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t count = 0;
    // exhaustive with degree pre-filter; n <= 8 keeps this trivial
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (h.degree(v) != h.degree(perm[v])) ok = false;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (h.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

copy_count_t count_copies(const Graph& h, const Graph& g) {
    if (h.n() == 0) return 1;
    return count_embeddings(h, g) / automorphism_order(h);
}

copy_count_t count_copies(Pattern h, const Graph& g) { return count_copies(resolve(h), g); }

namespace {

bool induced_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.n();
    if (n != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::vector<int> sa(da), sb(db);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (da[v] != db[perm[v]]) ok = false;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

copy_count_t count_induced(const Graph& h, const Graph& g) {
    const int k = h.n();
    if (k > 8) throw std::invalid_argument("pattern too large");
    if (k > g.n()) return 0;
    copy_count_t count = 0;
    std::vector<int> subset(k);
    auto rec = [&](auto&& self, int idx, int next) -> void {
        if (idx == k) {
            if (induced_isomorphic(g.induced(subset), h)) ++count;
            return;
        }
        for (int v = next; v <= g.n() - (k - idx); ++v) {
            subset[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

copy_count_t count_induced(Pattern h, const Graph& g) { return count_induced(resolve(h), g); }

namespace {

// popcount of row(u) & row(v)
int codegree(const Graph& g, int u, int v) {
    int c = 0;
    for (int w = 0; w < g.words(); ++w) c += std::popcount(g.row_word(u, w) & g.row_word(v, w));
    return c;
}

} // namespace

std::array<copy_count_t, 10> count_all_fast(const Graph& g) {
    const int n = g.n();
    std::array<copy_count_t, 10> c{};
    std::vector<int> deg(n);
    copy_count_t m = 0, p3 = 0, s4 = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        m += deg[v];
        p3 += binom(deg[v], 2);
        s4 += binom(deg[v], 3);
    }
    m /= 2;

    copy_count_t k3 = 0, t1 = 0, k4 = 0, b2 = 0, c4 = 0, p4 = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int cd = codegree(g, u, v);
            c4 += binom(cd, 2);
            if (!g.has_edge(u, v)) continue;
            b2 += binom(cd, 2);
            p4 += static_cast<copy_count_t>(deg[u] - 1) * static_cast<copy_count_t>(deg[v] - 1);
            // triangles u < v < w, counted once; T1/K4 hang off each one
            for (int w = v + 1; w < n; ++w) {
                if (!g.has_edge(u, w) || !g.has_edge(v, w)) continue;
                ++k3;
                t1 += static_cast<copy_count_t>(deg[u] + deg[v] + deg[w] - 6);
                int common3 = 0;
                for (int ww = w >> 6; ww < g.words(); ++ww) {
                    uint64_t bitsw = g.row_word(u, ww) & g.row_word(v, ww) & g.row_word(w, ww);
                    if (ww == (w >> 6)) {
                        const int b = w & 63;
                        const uint64_t low = (b == 63) ? ~0ull : ((1ull << (b + 1)) - 1);
                        bitsw &= ~low;
                    }
                    common3 += std::popcount(bitsw);
                }
                k4 += common3;
            }
        }
    }
    c4 /= 2;
    p4 -= 3 * k3;

    c[static_cast<size_t>(Pattern::K2)] = m;
    c[static_cast<size_t>(Pattern::P3)] = p3;
    c[static_cast<size_t>(Pattern::K3)] = k3;
    c[static_cast<size_t>(Pattern::M2)] = binom(m, 2) - p3;
    c[static_cast<size_t>(Pattern::S4)] = s4;
    c[static_cast<size_t>(Pattern::P4)] = p4;
    c[static_cast<size_t>(Pattern::C4)] = c4;
    c[static_cast<size_t>(Pattern::T1)] = t1;
    c[static_cast<size_t>(Pattern::B2)] = b2;
    c[static_cast<size_t>(Pattern::K4)] = k4;
    return c;
}

copy_count_t count_copies_fast(Pattern h, const Graph& g) {
    return count_all_fast(g)[static_cast<size_t>(h)];
}

} // namespace gturan
