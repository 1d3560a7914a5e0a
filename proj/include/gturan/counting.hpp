#pragma once

#include <array>

#include "gturan/graph.hpp"

namespace gturan {

// Injective edge-preserving maps V(h) -> V(g); |V(h)| <= 8.
copy_count_t count_embeddings(const Graph& h, const Graph& g);

// Order of the automorphism group; |V(h)| <= 8.
uint64_t automorphism_order(const Graph& h);

// Copies = unlabeled subgraphs isomorphic to h, i.e. embeddings / |Aut(h)|.
copy_count_t count_copies(const Graph& h, const Graph& g);
copy_count_t count_copies(Pattern h, const Graph& g);

// Vertex subsets of g whose induced subgraph is isomorphic to h.
copy_count_t count_induced(const Graph& h, const Graph& g);
copy_count_t count_induced(Pattern h, const Graph& g);

// Degree/codegree closed forms for the ten patterns, independent of the
// backtracking embedder.
copy_count_t count_copies_fast(Pattern h, const Graph& g);
std::array<copy_count_t, 10> count_all_fast(const Graph& g);

} // namespace gturan
