#include "gturan/symmetrize.hpp"

#include <algorithm>
#include <cassert>

namespace gturan {

Graph symmetrize_step(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("symmetrize needs two distinct vertices");
    if (g.has_edge(u, v)) throw std::invalid_argument("symmetrize needs a non-adjacent pair");
    Graph out = g;
    out.clear_vertex(u);
    for (int w : g.neighbors(v)) out.add_edge(u, w);
    return out;
}

bool is_complete_multipartite(const Graph& g) {
    // non-adjacency must be transitive
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            for (int w = 0; w < g.words(); ++w) {
                uint64_t diff = g.row_word(u, w) ^ g.row_word(v, w);
                if (w == (u >> 6)) diff &= ~(1ull << (u & 63));
                if (w == (v >> 6)) diff &= ~(1ull << (v & 63));
                if (diff) return false;
            }
        }
    return true;
}

namespace {

bool same_neighborhood(const Graph& g, int u, int v) {
    for (int w = 0; w < g.words(); ++w) {
        uint64_t diff = g.row_word(u, w) ^ g.row_word(v, w);
        if (w == (u >> 6)) diff &= ~(1ull << (u & 63));
        if (w == (v >> 6)) diff &= ~(1ull << (v & 63));
        if (diff) return false;
    }
    return true;
}

int identical_pairs(const Graph& g) {
    int c = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v) && same_neighborhood(g, u, v)) ++c;
    return c;
}

struct Runner {
    Pattern h;
    bool assert_monotone;
    std::vector<SymStep> steps;

    // one symmetrization of the pair (u,v), better direction first
    Graph apply(const Graph& g, int u, int v) {
        const copy_count_t before = count_copies_fast(h, g);
        Graph a = symmetrize_step(g, u, v);
        Graph b = symmetrize_step(g, v, u);
        const copy_count_t ca = count_copies_fast(h, a);
        const copy_count_t cb = count_copies_fast(h, b);

        bool pick_a;
        if (ca != cb) {
            pick_a = ca > cb;
        } else {
            const int pa = identical_pairs(a), pb = identical_pairs(b);
            if (pa != pb) {
                pick_a = pa > pb;
            } else {
                pick_a = !(canonical_form(b) < canonical_form(a));
            }
        }
        const copy_count_t after = pick_a ? ca : cb;
        if (assert_monotone) assert(after >= before);
        steps.push_back({u, v, pick_a, before, after});
        return pick_a ? std::move(a) : std::move(b);
    }
};

} // namespace

SymmetrizationTrace run_to_multipartite(const Graph& g, Pattern h) {
    Runner r{h, pattern_is_complete_multipartite(h), {}};
    const uint64_t budget = static_cast<uint64_t>(g.n()) * g.n() * g.n() + 16;
    Graph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < cur.n() && !changed; ++u)
            for (int v = u + 1; v < cur.n() && !changed; ++v) {
                if (cur.has_edge(u, v) || same_neighborhood(cur, u, v)) continue;
                cur = r.apply(cur, u, v);
                changed = true; // restart the scan after any change
            }
        if (r.steps.size() > budget) throw budget_error("symmetrization step budget exceeded");
    }
    assert(is_complete_multipartite(cur));
    return {std::move(r.steps), std::move(cur), std::nullopt};
}

SymmetrizationTrace run_preserving_independent_set(const Graph& g, Pattern h,
                                                   const std::vector<int>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (g.has_edge(a[i], a[j])) throw std::invalid_argument("A is not independent");

    std::vector<uint8_t> in_a(g.n(), 0);
    for (int v : a) in_a[v] = 1;

    Runner r{h, pattern_is_complete_multipartite(h), {}};
    const uint64_t budget = static_cast<uint64_t>(g.n()) * g.n() * g.n() + 16;
    Graph cur = g;

    auto inside_a_pair = [&](int& u, int& v) {
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
                if (!same_neighborhood(cur, a[i], a[j])) {
                    u = a[i];
                    v = a[j];
                    return true;
                }
        return false;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        int u, v;
        // pairs inside A always take priority
        if (inside_a_pair(u, v)) {
            cur = r.apply(cur, u, v);
            changed = true;
        } else {
            for (int x = 0; x < cur.n() && !changed; ++x)
                for (int y = x + 1; y < cur.n() && !changed; ++y) {
                    if (cur.has_edge(x, y) || same_neighborhood(cur, x, y)) continue;
                    cur = r.apply(cur, x, y);
                    changed = true;
                }
        }
        // A must stay independent after every step
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = i + 1; j < a.size(); ++j)
                assert(!cur.has_edge(a[i], a[j]));
        if (r.steps.size() > budget) throw budget_error("symmetrization step budget exceeded");
    }
    assert(is_complete_multipartite(cur));
    return {std::move(r.steps), std::move(cur), a};
}

} // namespace gturan
