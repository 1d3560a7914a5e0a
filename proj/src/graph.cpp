#include "gturan/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>

namespace gturan {

std::string count_to_string(copy_count_t x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

copy_count_t binom(copy_count_t n, unsigned k) {
    if (n < k) return 0;
    copy_count_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge");
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
}

void Graph::clear_vertex(int v) {
    check_vertex(v);
    for (int u : neighbors(v)) remove_edge(u, v);
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row_word(v, w));
    return d;
}

int Graph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        uint64_t word = row_word(v, w);
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph g(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::with_vertex_removed(int v) const {
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced(keep);
}

Graph Graph::with_extra_vertex(uint64_t nbhd_mask) const {
    assert(n_ < 64);
    Graph g(n_ + 1);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) g.add_edge(u, v);
    for (int u = 0; u < n_; ++u)
        if ((nbhd_mask >> u) & 1u) g.add_edge(u, n_);
    return g;
}

// --- patterns --------------------------------------------------------------

namespace {

std::array<Graph, 10> make_patterns() {
    using E = std::vector<std::pair<int, int>>;
    std::array<Graph, 10> p;
    p[0] = Graph::from_edge_list(2, E{{0, 1}});
    p[1] = Graph::from_edge_list(3, E{{0, 1}, {1, 2}});
    p[2] = Graph::from_edge_list(3, E{{0, 1}, {1, 2}, {0, 2}});
    p[3] = Graph::from_edge_list(4, E{{0, 1}, {2, 3}});
    p[4] = Graph::from_edge_list(4, E{{0, 1}, {0, 2}, {0, 3}});
    p[5] = Graph::from_edge_list(4, E{{0, 1}, {1, 2}, {2, 3}});
    p[6] = Graph::from_edge_list(4, E{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    // paw: triangle 0,1,2 plus pendant 3 attached to 0
    p[7] = Graph::from_edge_list(4, E{{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    // book with two pages = K4 minus the edge 2-3
    p[8] = Graph::from_edge_list(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    p[9] = Graph::from_edge_list(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    return p;
}

constexpr std::array<std::string_view, 10> kPatternNames = {
    "K2", "P3", "K3", "M2", "S4", "P4", "C4", "T1", "B2", "K4",
};

} // namespace

const Graph& resolve(Pattern p) {
    static const std::array<Graph, 10> patterns = make_patterns();
    return patterns[static_cast<size_t>(p)];
}

std::string_view pattern_name(Pattern p) { return kPatternNames[static_cast<size_t>(p)]; }

std::optional<Pattern> pattern_from_name(std::string_view name) {
    std::string up;
    for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (size_t i = 0; i < kPatternNames.size(); ++i)
        if (up == kPatternNames[i]) return kPatterns[i];
    return std::nullopt;
}

int pattern_vertices(Pattern p) { return resolve(p).n(); }

bool pattern_is_complete_multipartite(Pattern p) {
    switch (p) {
    case Pattern::K2:
    case Pattern::P3:
    case Pattern::K3:
    case Pattern::S4:
    case Pattern::C4:
    case Pattern::B2:
    case Pattern::K4: return true;
    case Pattern::M2:
    case Pattern::P4:
    case Pattern::T1: return false;
    }
    return false;
}

// --- canonical form ---------------------------------------------------------

namespace {

// Iterated neighborhood refinement. Color ids are assigned by sorting the
// (old color, sorted neighbor colors) signatures, so they are invariant
// under relabeling given an invariant seed.
std::vector<int> refine_colors(const Graph& g, const std::vector<int64_t>& seed) {
    const int n = g.n();
    std::vector<int> color(n, 0);
    {
        std::vector<int64_t> sorted(seed);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seed[v]) - sorted.begin());
    }
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);

    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            for (int u : g.neighbors(v)) sig[v].push_back(color[u]);
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::vector<std::vector<int>> sorted(sig);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        int new_classes = static_cast<int>(sorted.size());
        if (new_classes == classes) break;
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        classes = new_classes;
    }
    return color;
}

struct CanonSearch {
    const Graph* g = nullptr;
    int n = 0;
    int total_bits = 0;
    std::vector<int> color;
    std::vector<int> slot_color;     // required color for each position
    std::vector<uint8_t> used;
    std::vector<int> order;          // current prefix, order[pos] = vertex
    std::vector<uint8_t> cur;        // one byte per upper-triangle bit
    std::vector<uint8_t> best;
    std::vector<int> best_order;
    uint64_t nodes = 0;
    uint64_t node_budget = 50'000'000;

    bool twin(int u, int v) const {
        // identical rows once the u,v self bits are masked out
        for (int w = 0; w < g->words(); ++w) {
            uint64_t x = g->row_word(u, w) ^ g->row_word(v, w);
            if (w == u >> 6) x &= ~(1ull << (u & 63));
            if (w == v >> 6) x &= ~(1ull << (v & 63));
            if (x) return false;
        }
        return true;
    }

    void dfs(int pos) {
        if (++nodes > node_budget) throw budget_error("canonical form node budget exceeded");
        if (pos == n) {
            best.assign(cur.begin(), cur.end());
            best_order = order;
            return;
        }
        std::vector<int> cands;
        for (int v = 0; v < n; ++v)
            if (!used[v] && color[v] == slot_color[pos]) cands.push_back(v);

        const int off = pos * (pos - 1) / 2;
        std::vector<std::vector<uint8_t>> cols(cands.size());
        for (size_t i = 0; i < cands.size(); ++i) {
            cols[i].resize(pos);
            for (int j = 0; j < pos; ++j) cols[i][j] = g->has_edge(cands[i], order[j]) ? 1 : 0;
        }
        std::vector<size_t> idx(cands.size());
        std::iota(idx.begin(), idx.end(), size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return cols[a] < cols[b]; });

        std::vector<int> explored;
        for (size_t ii : idx) {
            int v = cands[ii];
            bool dup = false;
            for (int u : explored)
                if (twin(u, v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;

            // compare this column against best; prune if larger, tighten best
            // with an all-ones tail if smaller
            int cmp = 0;
            for (int j = 0; j < pos; ++j) {
                if (cols[ii][j] != best[off + j]) {
                    cmp = cols[ii][j] < best[off + j] ? -1 : 1;
                    break;
                }
            }
            if (cmp > 0) {
                explored.push_back(v);
                continue;
            }
            if (cmp < 0) {
                std::copy(cols[ii].begin(), cols[ii].end(), best.begin() + off);
                std::fill(best.begin() + off + pos, best.end(), uint8_t{1});
                best_order.clear();
            }
            std::copy(cols[ii].begin(), cols[ii].end(), cur.begin() + off);
            used[v] = 1;
            order.push_back(v);
            dfs(pos + 1);
            order.pop_back();
            used[v] = 0;
            explored.push_back(v);
        }
    }
};

struct CanonResult {
    CanonicalForm form;
    std::vector<int> order;
};

CanonResult run_canon(const Graph& g, int mark) {
    const int n = g.n();
    CanonResult res;
    res.form.n = n;
    if (n == 0) return res;

    std::vector<int64_t> seed(n);
    for (int v = 0; v < n; ++v) seed[v] = g.degree(v) + (v == mark ? (int64_t{1} << 30) : 0);

    CanonSearch s;
    s.g = &g;
    s.n = n;
    s.total_bits = n * (n - 1) / 2;
    s.color = refine_colors(g, seed);
    {
        std::vector<int> colors_sorted(s.color);
        std::sort(colors_sorted.begin(), colors_sorted.end());
        s.slot_color = colors_sorted;
    }
    s.used.assign(n, 0);
    s.cur.assign(s.total_bits, 0);
    s.best.assign(s.total_bits, 1);
    s.order.reserve(n);
    s.dfs(0);

    res.form.bits.assign((s.total_bits + 63) / 64, 0);
    for (int i = 0; i < s.total_bits; ++i)
        if (s.best[i]) res.form.bits[i >> 6] |= 1ull << (i & 63);
    res.order = s.best_order;
    return res;
}

} // namespace

CanonicalForm canonical_form(const Graph& g) { return run_canon(g, -1).form; }

std::vector<int> canonical_ordering(const Graph& g) { return run_canon(g, -1).order; }

MarkedCanonicalForm marked_canonical_form(const Graph& g, int mark) {
    if (mark < 0 || mark >= g.n()) throw std::invalid_argument("mark out of range");
    CanonResult res = run_canon(g, mark);
    MarkedCanonicalForm out;
    out.base = std::move(res.form);
    for (size_t pos = 0; pos < res.order.size(); ++pos)
        if (res.order[pos] == mark) out.mark_pos = static_cast<int>(pos);
    return out;
}

Graph canonical_graph(const CanonicalForm& form) {
    Graph g(form.n);
    int idx = 0;
    for (int j = 1; j < form.n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((form.bits[idx >> 6] >> (idx & 63)) & 1u) g.add_edge(i, j);
    return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a) == canonical_form(b);
}

// --- subgraph containment ---------------------------------------------------

namespace {

// Candidate backtracking. Pattern vertices are embedded in an order that
// keeps each new vertex attached to the already-placed ones where possible.
struct Embedder {
    const Graph* host = nullptr;
    const Graph* pat = nullptr;
    std::vector<int> order;
    std::vector<std::vector<int>> placed_nbrs; // pattern neighbors among earlier order
    int fixed_pat = -1;                        // optional pre-assigned pattern vertex
    int fixed_host = -1;
    bool found = false;

    void setup() {
        const int k = pat->n();
        std::vector<uint8_t> taken(k, 0);
        order.clear();
        placed_nbrs.assign(k, {});
        if (fixed_pat >= 0) {
            taken[fixed_pat] = 1;
            order.push_back(fixed_pat);
        }
        while (static_cast<int>(order.size()) < k) {
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
        for (int step = 0; step < k; ++step)
            for (int j = 0; j < step; ++j)
                if (pat->has_edge(order[j], order[step])) placed_nbrs[step].push_back(j);
    }

    // counts embeddings unless stop_at_first
    copy_count_t run(bool stop_at_first) {
        setup();
        assignment.assign(pat->n(), -1);
        used.assign(host->n(), 0);
        count = 0;
        stop = stop_at_first;
        found = false;
        place(0);
        return count;
    }

  private:
    std::vector<int> assignment;
    std::vector<uint8_t> used;
    copy_count_t count = 0;
    bool stop = false;

    void place(int step) {
        if (stop && found) return;
        const int k = pat->n();
        if (step == k) {
            ++count;
            found = true;
            return;
        }
        const int pv = order[step];
        const int pdeg = pat->degree(pv);
        const int lo = (step == 0 && fixed_host >= 0) ? fixed_host : 0;
        const int hi = (step == 0 && fixed_host >= 0) ? fixed_host + 1 : host->n();
        for (int hv = lo; hv < hi; ++hv) {
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
            if (stop && found) return;
        }
    }
};

} // namespace

bool contains_subgraph(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return false;
    if (h.edge_count() > g.edge_count()) return false;
    Embedder e;
    e.host = &g;
    e.pat = &h;
    e.run(true);
    return e.found;
}

bool contains_subgraph_through(const Graph& g, const Graph& h, int v) {
    if (h.n() > g.n()) return false;
    for (int pv = 0; pv < h.n(); ++pv) {
        Embedder e;
        e.host = &g;
        e.pat = &h;
        e.fixed_pat = pv;
        e.fixed_host = v;
        e.run(true);
        if (e.found) return true;
    }
    return false;
}

// --- coloring ----------------------------------------------------------------

namespace {

bool colorable(const Graph& g, int k) {
    const int n = g.n();
    if (n == 0) return true;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(n, -1);

    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        int max_used = 0;
        for (int j = 0; j < idx; ++j) max_used = std::max(max_used, color[order[j]] + 1);
        int limit = std::min(k, max_used + 1); // first use of a new color: try lowest only
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, idx + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

int chromatic_number(const Graph& g) {
    if (g.n() > 16) throw std::invalid_argument("chromatic_number limited to 16 vertices");
    if (g.n() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int k = 2; k <= g.n(); ++k)
        if (colorable(g, k)) return k;
    return g.n();
}

std::vector<std::pair<int, int>> color_critical_edges(const Graph& g) {
    if (g.n() > 16) throw std::invalid_argument("color_critical_edges limited to 16 vertices");
    const int chi = chromatic_number(g);
    std::vector<std::pair<int, int>> crit;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            Graph h = g;
            h.remove_edge(u, v);
            if (chromatic_number(h) < chi) crit.emplace_back(u, v);
        }
    return crit;
}

// --- blow-up ------------------------------------------------------------------

Graph blowup(const Graph& h, int t) {
    if (t < 1) throw std::invalid_argument("blow-up multiplicity must be positive");
    if (h.n() * t > kMaxVertices) throw std::invalid_argument("blow-up too large");
    Graph g(h.n() * t);
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v) {
            if (!h.has_edge(u, v)) continue;
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b) g.add_edge(u * t + a, v * t + b);
        }
    return g;
}

bool blowup_contains(const Graph& h, const Graph& f, int t) {
    return contains_subgraph(blowup(h, t), f);
}

} // namespace gturan
