#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <optional>

#include "gturan/counting.hpp"
#include "gturan/graph.hpp"

namespace gturan {

inline constexpr int kSearchMaxN = 10;

struct SearchOptions {
    int workers = 1;
    bool maximal_only = true;
};

struct SearchResult {
    Pattern h, f;
    int n = 0;
    copy_count_t maximum = 0;
    std::vector<CanonicalForm> extremal; // all attaining graphs, sorted
    uint64_t graphs_visited = 0;         // f-free classes on n vertices
    std::chrono::duration<double> elapsed{0};
};

// Streams exactly one representative per isomorphism class of f-free graphs
// on n vertices (all graphs when f is absent), by canonical augmentation:
// extend by one vertex, prune when the new vertex closes a copy of f, accept
// only when the new vertex lies in the orbit of the canonical deletion
// vertex. With maximal_only, only graphs where every edge addition creates f
// are passed to the callback.
void enumerate_f_free(int n, std::optional<Pattern> f, bool maximal_only,
                      const std::function<void(const Graph&)>& yield);

uint64_t count_f_free_classes(int n, std::optional<Pattern> f);

// Exact maximum of N(h, .) over f-free graphs on n vertices plus the complete
// list of attaining graphs (over edge-maximal graphs when maximal_only; the
// maximum itself is unaffected since adding edges never loses copies).
SearchResult max_copies(Pattern h, Pattern f, int n, SearchOptions opts = {});

// Independent ground truth for all ten patterns at once over one shared
// enumeration of f-free graphs.
struct AllPatternMaxima {
    std::array<copy_count_t, 10> maximum{};
    uint64_t classes = 0;
};
AllPatternMaxima max_all_patterns(Pattern f, int n, int workers = 1);

// Iterates every labeled graph on n vertices (n <= 6), no isomorphism
// machinery involved; the oracle for the oracle.
copy_count_t brute_force_labeled(Pattern h, Pattern f, int n);

} // namespace gturan
