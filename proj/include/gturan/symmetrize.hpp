#pragma once

#include <optional>
#include <vector>

#include "gturan/counting.hpp"
#include "gturan/graph.hpp"

namespace gturan {

struct SymStep {
    int u = 0, v = 0;
    bool u_to_v = true; // true: u takes v's neighborhood
    copy_count_t count_before = 0;
    copy_count_t count_after = 0;
};

struct SymmetrizationTrace {
    std::vector<SymStep> steps;
    Graph final;
    std::optional<std::vector<int>> preserved;
};

// Replace u's neighborhood by v's; u and v must be distinct and non-adjacent.
Graph symmetrize_step(const Graph& g, int u, int v);

bool is_complete_multipartite(const Graph& g);

// Repeatedly symmetrizes one vertex of a non-adjacent pair with differing
// neighborhoods to the other, choosing the direction that keeps N(h, .)
// largest, until the graph is complete multipartite. For complete multipartite
// h the count never decreases (asserted); other patterns run with the
// monotonicity assertion off.
SymmetrizationTrace run_to_multipartite(const Graph& g, Pattern h);

// Two-phase schedule that keeps A independent throughout and lands A inside a
// single part of the final graph: first equalize neighborhoods inside A, then
// symmetrize anywhere while re-equalizing A whenever it splits.
SymmetrizationTrace run_preserving_independent_set(const Graph& g, Pattern h,
                                                   const std::vector<int>& a);

} // namespace gturan
