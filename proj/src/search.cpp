#include "gturan/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>
#include <unordered_set>

namespace gturan {

namespace {

bool creates_f_through_last(const Graph& g, const Graph& f) {
    return contains_subgraph_through(g, f, g.n() - 1);
}

// every non-edge addition creates a copy of f
bool is_edge_maximal(const Graph& g, const Graph& f) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            Graph h = g;
            h.add_edge(u, v);
            // the new copy must use the edge u-v, hence the vertex u
            if (!contains_subgraph_through(h, f, u)) return false;
        }
    return true;
}

struct Enumerator {
    int n;
    const Graph* forbidden = nullptr; // null = enumerate everything
    bool maximal_only = false;
    const std::function<void(const Graph&)>* yield = nullptr;

    void emit(const Graph& g) {
        if (maximal_only) {
            if (forbidden != nullptr && !is_edge_maximal(g, *forbidden)) return;
            if (forbidden == nullptr && g.edge_count() != g.n() * (g.n() - 1) / 2) return;
        }
        if (yield) (*yield)(g);
    }

    void grow(const Graph& g) {
        if (g.n() == n) {
            emit(g);
            return;
        }
        const int k = g.n();
        std::unordered_set<MarkedCanonicalForm> siblings;
        for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
            Graph child = g.with_extra_vertex(mask);
            if (forbidden != nullptr && creates_f_through_last(child, *forbidden)) continue;
            MarkedCanonicalForm key = marked_canonical_form(child, k);
            if (!siblings.insert(key).second) continue;
            const int w = canonical_ordering(child).back();
            if (w != k && !(marked_canonical_form(child, w) == key)) continue;
            grow(child);
        }
    }

    void run() {
        if (n == 0) {
            emit(Graph(0));
            return;
        }
        grow(Graph(1));
    }
};

// graphs on `depth` vertices from which the full enumeration is resumed in
// parallel; the prefix stream is deterministic, so the root order is too
std::vector<Graph> collect_roots(const Graph* forbidden, int depth) {
    std::vector<Graph> roots;
    Enumerator en;
    en.n = depth;
    en.forbidden = forbidden;
    en.maximal_only = false;
    std::function<void(const Graph&)> cb = [&](const Graph& g) { roots.push_back(g); };
    en.yield = &cb;
    en.run();
    return roots;
}

int pick_split_depth(int n, int workers) {
    if (workers <= 1 || n <= 4) return n; // no split
    return std::min(n - 1, 5);
}

} // namespace

void enumerate_f_free(int n, std::optional<Pattern> f, bool maximal_only,
                      const std::function<void(const Graph&)>& yield) {
    if (n < 0 || n > kSearchMaxN) throw budget_error("enumeration budget is n <= 10");
    Enumerator en;
    en.n = n;
    en.forbidden = f ? &resolve(*f) : nullptr;
    en.maximal_only = maximal_only;
    en.yield = &yield;
    en.run();
}

uint64_t count_f_free_classes(int n, std::optional<Pattern> f) {
    uint64_t count = 0;
    enumerate_f_free(n, f, false, [&](const Graph&) { ++count; });
    return count;
}

namespace {

template <typename PerGraph, typename State>
void scan_parallel(int n, Pattern f, int workers, State init, PerGraph per_graph,
                   std::vector<State>& out) {
    const Graph& fg = resolve(f);
    const int depth = pick_split_depth(n, workers);
    if (depth >= n) {
        State st = init;
        Enumerator en;
        en.n = n;
        en.forbidden = &fg;
        en.maximal_only = true;
        std::function<void(const Graph&)> cb = [&](const Graph& g) { per_graph(st, g); };
        en.yield = &cb;
        en.run();
        out.push_back(std::move(st));
        return;
    }
    std::vector<Graph> roots = collect_roots(&fg, depth);
    out.assign(roots.size(), init);
    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= roots.size()) break;
            Enumerator en;
            en.n = n;
            en.forbidden = &fg;
            en.maximal_only = true;
            std::function<void(const Graph&)> cb = [&](const Graph& g) { per_graph(out[i], g); };
            en.yield = &cb;
            en.grow(roots[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
}

} // namespace

SearchResult max_copies(Pattern h, Pattern f, int n, SearchOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    SearchResult res;
    res.h = h;
    res.f = f;
    res.n = n;

    struct State {
        copy_count_t best = 0;
        std::vector<CanonicalForm> argmax;
        uint64_t seen = 0;
    };
    auto consider = [h](State& st, const Graph& g) {
        ++st.seen;
        const copy_count_t c = count_copies_fast(h, g);
        if (c > st.best) {
            st.best = c;
            st.argmax.clear();
        }
        if (c == st.best) st.argmax.push_back(canonical_form(g));
    };

    std::vector<State> parts;
    if (opts.maximal_only) {
        scan_parallel(n, f, opts.workers, State{}, consider, parts);
    } else {
        State st;
        enumerate_f_free(n, f, false, [&](const Graph& g) { consider(st, g); });
        parts.push_back(std::move(st));
    }

    for (const State& st : parts) {
        res.graphs_visited += st.seen;
        if (st.best > res.maximum) {
            res.maximum = st.best;
            res.extremal.clear();
        }
    }
    for (const State& st : parts)
        if (st.best == res.maximum)
            res.extremal.insert(res.extremal.end(), st.argmax.begin(), st.argmax.end());
    // merge by canonical-form order: independent of worker scheduling
    std::sort(res.extremal.begin(), res.extremal.end());
    res.extremal.erase(std::unique(res.extremal.begin(), res.extremal.end()), res.extremal.end());

    // zero copies means "every f-free graph attains the max"; keep the list to
    // the edgeless representative in that case
    if (res.maximum == 0) res.extremal = {canonical_form(Graph(n))};

    // re-verify post hoc: every listed graph is f-free and attains the maximum
    for (const CanonicalForm& cf : res.extremal) {
        Graph g = canonical_graph(cf);
        assert(!contains_subgraph(g, resolve(f)));
        assert(count_copies(h, g) == res.maximum);
        (void)g;
    }
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
}

AllPatternMaxima max_all_patterns(Pattern f, int n, int workers) {
    struct State {
        std::array<copy_count_t, 10> best{};
        uint64_t seen = 0;
    };
    auto consider = [](State& st, const Graph& g) {
        ++st.seen;
        const auto counts = count_all_fast(g);
        for (size_t i = 0; i < 10; ++i) st.best[i] = std::max(st.best[i], counts[i]);
    };
    std::vector<State> parts;
    scan_parallel(n, f, workers, State{}, consider, parts);

    AllPatternMaxima out;
    for (const State& st : parts) {
        out.classes += st.seen;
        for (size_t i = 0; i < 10; ++i) out.maximum[i] = std::max(out.maximum[i], st.best[i]);
    }
    return out;
}

copy_count_t brute_force_labeled(Pattern h, Pattern f, int n) {
    if (n < 0 || n > 6) throw budget_error("labeled brute force budget is n <= 6");
    const Graph& fg = resolve(f);
    const int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

    copy_count_t best = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
        Graph g(n);
        for (int b = 0; b < bits; ++b)
            if ((mask >> b) & 1u) g.add_edge(pairs[b].first, pairs[b].second);
        if (contains_subgraph(g, fg)) continue;
        best = std::max(best, count_copies_fast(h, g));
    }
    return best;
}

} // namespace gturan
