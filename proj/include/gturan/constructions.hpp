#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

enum class Family : uint8_t {
    TuranGraph,             // (n, r) balanced complete r-partite
    CompleteMultipartite,   // (s1, s2, ...) part sizes
    CompleteBipartite,      // (a, b)
    DGraph,                 // (k, n) floor(n/k) copies of K_k plus a clique on the rest
    CliquePlusIndependent,  // (s, t) K_s joined to t independent vertices
    GGraph,                 // (n, k, l) independent A, universal B, clique C
    Friendship,             // (n) universal vertex plus a maximum matching on the rest
    Star,                   // (n)
    Path,                   // (n)
    Cycle,                  // (n)
    Matching,               // (l) l disjoint edges
    TGraph,                 // (l) triangle plus l pendants on one triangle vertex
    Book,                   // (k) k triangles sharing one edge
    TwoRegularTriangleFree, // (n) a single C_n, n >= 4
    RSTriangleGraph,        // (m) tripartite graph whose every edge lies in one triangle
};

struct FamilySpec {
    Family family;
    std::vector<int> params;

    bool operator==(const FamilySpec&) const = default;
};

Graph build(const FamilySpec& spec);

// True iff g satisfies the family's characteristic property (Friendship is
// C4-free, DGraph(k,n) is P_{k+1}- and S_{k+1}-free, RSTriangleGraph has every
// edge in exactly one triangle, ...).
bool defining_property_check(const FamilySpec& spec, const Graph& g);

std::string_view family_name(Family f);
std::string family_spec_to_string(const FamilySpec& spec);
FamilySpec parse_family_spec(std::string_view name, const std::vector<int>& params);

// Greedily built subset of {0,...,m-1} containing no 3-term arithmetic
// progression; the witness set behind RSTriangleGraph.
std::vector<int> greedy_progression_free_set(int m);

} // namespace gturan
