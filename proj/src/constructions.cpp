#include "gturan/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gturan/counting.hpp"

namespace gturan {

namespace {

void need_params(const FamilySpec& spec, size_t k) {
    if (spec.params.size() != k) throw std::invalid_argument("wrong parameter count for family");
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int s : parts) {
        if (s < 0) throw std::invalid_argument("negative part size");
        n += s;
    }
    Graph g(n);
    int off_i = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        int off_j = off_i + parts[i];
        for (size_t j = i + 1; j < parts.size(); ++j) {
            for (int a = 0; a < parts[i]; ++a)
                for (int b = 0; b < parts[j]; ++b) g.add_edge(off_i + a, off_j + b);
            off_j += parts[j];
        }
        off_i += parts[i];
    }
    return g;
}

std::vector<int> turan_parts(int n, int r) {
    // larger parts first, fixed labeling
    std::vector<int> parts(r);
    for (int i = 0; i < r; ++i) parts[i] = n / r + (i < n % r ? 1 : 0);
    return parts;
}

Graph build_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = build_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

} // namespace

std::vector<int> greedy_progression_free_set(int m) {
    std::vector<int> s;
    for (int x = 0; x < m; ++x) {
        bool ok = true;
        // adding x may only close a progression a < b < x with a+x = 2b
        for (size_t i = 0; i < s.size() && ok; ++i)
            for (size_t j = i + 1; j < s.size() && ok; ++j)
                if (s[i] + x == 2 * s[j]) ok = false;
        if (ok) s.push_back(x);
    }
    return s;
}

Graph build(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::TuranGraph: {
        need_params(spec, 2);
        const int n = spec.params[0], r = spec.params[1];
        if (r < 1 || n < 0) throw std::invalid_argument("TuranGraph needs n >= 0, r >= 1");
        return complete_multipartite(turan_parts(n, r));
    }
    case Family::CompleteMultipartite: return complete_multipartite(spec.params);
    case Family::CompleteBipartite: {
        need_params(spec, 2);
        return complete_multipartite({spec.params[0], spec.params[1]});
    }
    case Family::DGraph: {
        need_params(spec, 2);
        const int k = spec.params[0], n = spec.params[1];
        if (k < 1 || n < 0) throw std::invalid_argument("DGraph needs k >= 1, n >= 0");
        Graph g(n);
        const int copies = n / k;
        for (int c = 0; c < copies; ++c)
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) g.add_edge(c * k + a, c * k + b);
        for (int a = copies * k; a < n; ++a)
            for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
        return g;
    }
    case Family::CliquePlusIndependent: {
        need_params(spec, 2);
        const int s = spec.params[0], t = spec.params[1];
        if (s < 0 || t < 0) throw std::invalid_argument("CliquePlusIndependent needs s,t >= 0");
        Graph g(s + t);
        for (int a = 0; a < s; ++a) {
            for (int b = a + 1; b < s; ++b) g.add_edge(a, b);
            for (int b = 0; b < t; ++b) g.add_edge(a, s + b);
        }
        return g;
    }
    case Family::GGraph: {
        need_params(spec, 3);
        const int n = spec.params[0], k = spec.params[1], l = spec.params[2];
        if (l < 0 || k - 2 * l < 0 || n < k - l)
            throw std::invalid_argument("GGraph needs l >= 0, k-2l >= 0, n >= k-l");
        // A independent (n-k+l), B universal (l), C clique (k-2l), no A-C edges
        const int a = n - k + l, b = l, c = k - 2 * l;
        Graph g(n);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < n; ++j)
                if (a + i != j) g.add_edge(a + i, j);
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) g.add_edge(a + b + i, a + b + j);
        return g;
    }
    case Family::Friendship: {
        need_params(spec, 1);
        const int n = spec.params[0];
        if (n < 1) throw std::invalid_argument("Friendship needs n >= 1");
        Graph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(0, v);
        for (int i = 1; i + 1 < n; i += 2) g.add_edge(i, i + 1);
        return g;
    }
    case Family::Star: {
        need_params(spec, 1);
        const int n = spec.params[0];
        if (n < 1) throw std::invalid_argument("Star needs n >= 1");
        Graph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(0, v);
        return g;
    }
    case Family::Path: {
        need_params(spec, 1);
        if (spec.params[0] < 1) throw std::invalid_argument("Path needs n >= 1");
        return build_path(spec.params[0]);
    }
    case Family::Cycle: {
        need_params(spec, 1);
        return build_cycle(spec.params[0]);
    }
    case Family::Matching: {
        need_params(spec, 1);
        const int l = spec.params[0];
        if (l < 0) throw std::invalid_argument("Matching needs l >= 0");
        Graph g(2 * l);
        for (int i = 0; i < l; ++i) g.add_edge(2 * i, 2 * i + 1);
        return g;
    }
    case Family::TGraph: {
        need_params(spec, 1);
        const int l = spec.params[0];
        if (l < 0) throw std::invalid_argument("TGraph needs l >= 0");
        Graph g(3 + l);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        for (int i = 0; i < l; ++i) g.add_edge(0, 3 + i);
        return g;
    }
    case Family::Book: {
        need_params(spec, 1);
        const int k = spec.params[0];
        if (k < 0) throw std::invalid_argument("Book needs k >= 0");
        Graph g(2 + k);
        g.add_edge(0, 1);
        for (int i = 0; i < k; ++i) {
            g.add_edge(0, 2 + i);
            g.add_edge(1, 2 + i);
        }
        return g;
    }
    case Family::TwoRegularTriangleFree: {
        need_params(spec, 1);
        const int n = spec.params[0];
        if (n < 4) throw std::invalid_argument("TwoRegularTriangleFree needs n >= 4");
        return build_cycle(n);
    }
    case Family::RSTriangleGraph: {
        need_params(spec, 1);
        const int m = spec.params[0];
        if (m < 1) throw std::invalid_argument("RSTriangleGraph needs m >= 1");
        if (6 * m > kMaxVertices) throw std::invalid_argument("RSTriangleGraph too large");
        // parts of sizes m, 2m, 3m; triangle (x, x+s, x+2s) per x in [0,m), s in S
        Graph g(6 * m);
        const std::vector<int> s_set = greedy_progression_free_set(m);
        for (int x = 0; x < m; ++x)
            for (int s : s_set) {
                const int y = m + x + s, z = 3 * m + x + 2 * s;
                g.add_edge(x, y);
                g.add_edge(y, z);
                g.add_edge(x, z);
            }
        return g;
    }
    }
    throw std::invalid_argument("unknown family");
}

namespace {

bool is_complete_multipartite_with_parts(const Graph& g, std::vector<int> parts) {
    // non-adjacency classes must match the given part sizes
    std::vector<int> cls(g.n(), -1);
    int c = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (cls[v] >= 0) continue;
        cls[v] = c;
        for (int u = v + 1; u < g.n(); ++u)
            if (cls[u] < 0 && !g.has_edge(u, v)) cls[u] = c;
        ++c;
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) == (cls[u] == cls[v])) return false;
    std::vector<int> sizes(c, 0);
    for (int v = 0; v < g.n(); ++v) ++sizes[cls[v]];
    std::sort(sizes.begin(), sizes.end());
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end());
    return sizes == parts;
}

bool every_edge_in_exactly_one_triangle(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            int tri = 0;
            for (int w = 0; w < g.n(); ++w)
                if (g.has_edge(u, w) && g.has_edge(v, w)) ++tri;
            if (tri != 1) return false;
        }
    return true;
}

} // namespace

bool defining_property_check(const FamilySpec& spec, const Graph& g) {
    switch (spec.family) {
    case Family::TuranGraph:
        return is_complete_multipartite_with_parts(g, turan_parts(spec.params[0], spec.params[1]));
    case Family::CompleteMultipartite: return is_complete_multipartite_with_parts(g, spec.params);
    case Family::CompleteBipartite:
        return is_complete_multipartite_with_parts(g, {spec.params[0], spec.params[1]});
    case Family::DGraph: {
        const int k = spec.params[0];
        if (k + 1 > 8) return g.n() == spec.params[1]; // pattern builder bound
        Graph path = build_path(k + 1);
        Graph star(k + 1);
        for (int v = 1; v <= k; ++v) star.add_edge(0, v);
        return !contains_subgraph(g, path) && !contains_subgraph(g, star);
    }
    case Family::CliquePlusIndependent: {
        // max matching has size s: free of M_{s+1}
        const int s = spec.params[0];
        Graph matching = build(FamilySpec{Family::Matching, {s + 1}});
        return g.edge_count() == s * (s - 1) / 2 + s * spec.params[1] &&
               (matching.n() > g.n() || !contains_subgraph(g, matching));
    }
    case Family::GGraph: {
        const int n = spec.params[0], k = spec.params[1], l = spec.params[2];
        const int a = n - k + l, b = l, c = k - 2 * l;
        for (int i = 0; i < b; ++i)
            if (g.degree(a + i) != n - 1) return false;
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                if (g.has_edge(i, j)) return false;
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j)
                if (!g.has_edge(a + b + i, a + b + j)) return false;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < c; ++j)
                if (g.has_edge(i, a + b + j)) return false;
        return true;
    }
    case Family::Friendship: {
        if (g.n() >= 2 && g.degree(0) != g.n() - 1) return false;
        return !contains_subgraph(g, resolve(Pattern::C4));
    }
    case Family::Star: return g.edge_count() == g.n() - 1 && g.degree(0) == g.n() - 1;
    case Family::Path: {
        if (g.edge_count() != g.n() - 1) return false;
        int deg1 = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) > 2) return false;
            if (g.degree(v) == 1) ++deg1;
        }
        return g.n() == 1 || deg1 == 2;
    }
    case Family::Cycle: {
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) != 2) return false;
        return g.edge_count() == g.n();
    }
    case Family::Matching: {
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) != 1) return false;
        return true;
    }
    case Family::TGraph:
        return count_copies(Pattern::K3, g) == 1 && g.degree(0) == 2 + spec.params[0];
    case Family::Book: {
        const int k = spec.params[0];
        if (!g.has_edge(0, 1) || g.degree(0) != k + 1 || g.degree(1) != k + 1) return false;
        for (int v = 2; v < g.n(); ++v)
            if (g.degree(v) != 2 || !g.has_edge(0, v) || !g.has_edge(1, v)) return false;
        return true;
    }
    case Family::TwoRegularTriangleFree: {
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) != 2) return false;
        return !contains_subgraph(g, resolve(Pattern::K3));
    }
    case Family::RSTriangleGraph: return every_edge_in_exactly_one_triangle(g);
    }
    return false;
}

std::string_view family_name(Family f) {
    switch (f) {
    case Family::TuranGraph: return "turan";
    case Family::CompleteMultipartite: return "complete-multipartite";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::DGraph: return "dgraph";
    case Family::CliquePlusIndependent: return "clique-plus-independent";
    case Family::GGraph: return "ggraph";
    case Family::Friendship: return "friendship";
    case Family::Star: return "star";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Matching: return "matching";
    case Family::TGraph: return "tgraph";
    case Family::Book: return "book";
    case Family::TwoRegularTriangleFree: return "two-regular-triangle-free";
    case Family::RSTriangleGraph: return "rs-triangle";
    }
    return "?";
}

std::string family_spec_to_string(const FamilySpec& spec) {
    std::string out(family_name(spec.family));
    out.push_back('(');
    for (size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(spec.params[i]);
    }
    out.push_back(')');
    return out;
}

FamilySpec parse_family_spec(std::string_view name, const std::vector<int>& params) {
    for (Family f : {Family::TuranGraph, Family::CompleteMultipartite, Family::CompleteBipartite,
                     Family::DGraph, Family::CliquePlusIndependent, Family::GGraph,
                     Family::Friendship, Family::Star, Family::Path, Family::Cycle,
                     Family::Matching, Family::TGraph, Family::Book,
                     Family::TwoRegularTriangleFree, Family::RSTriangleGraph}) {
        if (family_name(f) == name) return FamilySpec{f, params};
    }
    throw std::invalid_argument("unknown family: " + std::string(name));
}

} // namespace gturan
