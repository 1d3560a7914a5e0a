#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gturan {

inline constexpr int kMaxVertices = 512;

// Exact copy counts, integral throughout; counts for n <= 512 and 4-vertex
// patterns stay well inside 128 bits.
using copy_count_t = unsigned __int128;

std::string count_to_string(copy_count_t x);
copy_count_t binom(copy_count_t n, unsigned k);

// Thrown when a search/canonicalization exceeds its node budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph, adjacency stored as one bit row per vertex.
// Symmetric and irreflexive by construction: edges are only touched through
// add_edge/remove_edge, which maintain both rows and reject loops.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void clear_vertex(int v);

    int degree(int v) const;
    int edge_count() const;

    uint64_t row_word(int v, int w) const { return bits_[static_cast<size_t>(v) * words_ + w]; }
    std::vector<int> neighbors(int v) const;

    Graph induced(const std::vector<int>& verts) const;
    Graph with_vertex_removed(int v) const;
    Graph with_extra_vertex(uint64_t nbhd_mask) const; // n() < 64 only

    bool operator==(const Graph&) const = default;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

// The ten forbidden/counted patterns: all graphs on at most four vertices
// without isolated vertices.
enum class Pattern : uint8_t { K2, P3, K3, M2, S4, P4, C4, T1, B2, K4 };

inline constexpr std::array<Pattern, 10> kPatterns = {
    Pattern::K2, Pattern::P3, Pattern::K3, Pattern::M2, Pattern::S4,
    Pattern::P4, Pattern::C4, Pattern::T1, Pattern::B2, Pattern::K4,
};

const Graph& resolve(Pattern p);
std::string_view pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(std::string_view name);
int pattern_vertices(Pattern p);
// True for the patterns that are complete multipartite graphs
// (K2, P3=K_{1,2}, K3, S4=K_{1,3}, C4=K_{2,2}, B2=K_{1,1,2}, K4).
bool pattern_is_complete_multipartite(Pattern p);

// Total-order key over isomorphism classes: the lexicographically minimal
// upper-triangle bit string over all vertex orderings consistent with an
// iterated-refinement color order, found by branch and bound with twin
// pruning. Equal keys <=> isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::vector<uint64_t> bits; // packed upper triangle, graph6 bit order

    auto operator<=>(const CanonicalForm&) const = default;
};

struct MarkedCanonicalForm {
    CanonicalForm base;
    int mark_pos = -1;

    bool operator==(const MarkedCanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
std::vector<int> canonical_ordering(const Graph& g);
// Canonical form of (g, one distinguished vertex). Two marks give equal forms
// exactly when some automorphism maps one to the other.
MarkedCanonicalForm marked_canonical_form(const Graph& g, int mark);
Graph canonical_graph(const CanonicalForm& form);
bool isomorphic(const Graph& a, const Graph& b);

// Subgraph containment, not necessarily induced.
bool contains_subgraph(const Graph& g, const Graph& h);
// As above but the embedding must use vertex v of g.
bool contains_subgraph_through(const Graph& g, const Graph& h, int v);

int chromatic_number(const Graph& g);                           // n <= 16
std::vector<std::pair<int, int>> color_critical_edges(const Graph& g); // n <= 16

// t independent clones per vertex, complete bipartite between clone classes
// of adjacent vertices.
Graph blowup(const Graph& h, int t);
// Is f a subgraph of the t-fold blow-up of h?  With t = |V(f)| this decides
// containment in any blow-up of h.
bool blowup_contains(const Graph& h, const Graph& f, int t);

} // namespace gturan

template <> struct std::hash<gturan::CanonicalForm> {
    size_t operator()(const gturan::CanonicalForm& f) const {
        size_t h = std::hash<int>()(f.n);
        for (uint64_t w : f.bits) h = h * 1099511628211ull ^ std::hash<uint64_t>()(w);
        return h;
    }
};

template <> struct std::hash<gturan::MarkedCanonicalForm> {
    size_t operator()(const gturan::MarkedCanonicalForm& f) const {
        return std::hash<gturan::CanonicalForm>()(f.base) * 31 + static_cast<size_t>(f.mark_pos);
    }
};
