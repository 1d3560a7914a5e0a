#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "brute.hpp"
#include "gturan/constructions.hpp"
#include "gturan/graph.hpp"

using namespace gturan;

TEST_CASE("from_edge_list basics") {
    const Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(isomorphic(k3, resolve(Pattern::K3)));

    const Graph empty4 = Graph::from_edge_list(4, {});
    CHECK(empty4.edge_count() == 0);
    CHECK(empty4.n() == 4);

    const Graph m2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK(isomorphic(m2, resolve(Pattern::M2)));

    // duplicates collapse
    const Graph dup = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("adjacency stays symmetric and irreflexive") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        Graph g = brute::random_graph(rng, 9, 0.4);
        g.add_edge(0, 8);
        g.remove_edge(0, 8);
        for (int u = 0; u < g.n(); ++u) {
            CHECK(!g.has_edge(u, u));
            for (int v = 0; v < g.n(); ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
        int degsum = 0;
        for (int v = 0; v < g.n(); ++v) degsum += g.degree(v);
        CHECK(degsum == 2 * g.edge_count());
    }
}

TEST_CASE("canonical form: relabelings agree, distinct classes differ") {
    const Graph c4 = resolve(Pattern::C4);
    const Graph c4b = Graph::from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}, {1, 2}});
    CHECK(canonical_form(c4) == canonical_form(c4b));
    CHECK(canonical_form(c4) != canonical_form(resolve(Pattern::P4)));

    // round trip through the packed form
    CHECK(canonical_form(canonical_graph(canonical_form(c4))) == canonical_form(c4));
}

TEST_CASE("all 11 isomorphism classes on 4 vertices are told apart") {
    // derive the class count independently: bucket all 2^6 labeled graphs by
    // exhaustive isomorphism
    std::vector<Graph> reps;
    brute::for_each_labeled_graph(4, [&](const Graph& g) {
        for (const Graph& r : reps)
            if (brute::exhaustive_isomorphic(g, r)) return;
        reps.push_back(g);
    });
    CHECK(reps.size() == 11);

    std::set<CanonicalForm> forms;
    for (const Graph& r : reps) forms.insert(canonical_form(r));
    CHECK(forms.size() == 11);
}

TEST_CASE("canonical form agrees with exhaustive isomorphism, full sweep n <= 6") {
    const std::map<int, size_t> expected_classes = {{2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}};
    for (auto [n, classes] : expected_classes) {
        std::unordered_map<CanonicalForm, Graph> buckets;
        brute::for_each_labeled_graph(n, [&](const Graph& g) {
            const CanonicalForm cf = canonical_form(g);
            auto it = buckets.find(cf);
            if (it == buckets.end()) {
                buckets.emplace(cf, g);
            } else {
                // same form must mean isomorphic
                REQUIRE(brute::exhaustive_isomorphic(g, it->second));
            }
        });
        CHECK(buckets.size() == classes);
        // distinct forms must mean non-isomorphic
        std::vector<Graph> reps;
        for (const auto& [cf, g] : buckets) reps.push_back(g);
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j)
                REQUIRE(!brute::exhaustive_isomorphic(reps[i], reps[j]));
    }
}

TEST_CASE("marked canonical forms separate vertex orbits") {
    // paw: the two triangle vertices away from the pendant form one orbit
    const Graph paw = resolve(Pattern::T1);
    CHECK(marked_canonical_form(paw, 1) == marked_canonical_form(paw, 2));
    CHECK(!(marked_canonical_form(paw, 0) == marked_canonical_form(paw, 1)));
    CHECK(!(marked_canonical_form(paw, 3) == marked_canonical_form(paw, 1)));

    const Graph c4 = resolve(Pattern::C4);
    for (int v = 1; v < 4; ++v) CHECK(marked_canonical_form(c4, 0) == marked_canonical_form(c4, v));
}

TEST_CASE("contains_subgraph") {
    CHECK(contains_subgraph(resolve(Pattern::K4), resolve(Pattern::B2)));
    const Graph f9 = build({Family::Friendship, {9}});
    CHECK(!contains_subgraph(f9, resolve(Pattern::C4)));
    const Graph d37 = build({Family::DGraph, {3, 7}});
    CHECK(!contains_subgraph(d37, resolve(Pattern::P4)));

    // through-vertex variant
    const Graph paw = resolve(Pattern::T1);
    CHECK(contains_subgraph_through(paw, resolve(Pattern::K3), 0));
    CHECK(!contains_subgraph_through(paw, resolve(Pattern::K3), 3));
}

TEST_CASE("contains_subgraph is monotone under edge addition") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const Graph g = brute::random_graph(rng, 7, 0.3);
        for (Pattern p : kPatterns) {
            if (!contains_subgraph(g, resolve(p))) continue;
            Graph bigger = g;
            std::uniform_int_distribution<int> pick(0, 6);
            int u = pick(rng), v = pick(rng);
            if (u != v && !bigger.has_edge(u, v)) bigger.add_edge(u, v);
            CHECK(contains_subgraph(bigger, resolve(p)));
        }
    }
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(resolve(Pattern::K4)) == 4);
    CHECK(chromatic_number(resolve(Pattern::C4)) == 2);
    CHECK(chromatic_number(resolve(Pattern::T1)) == 3);
    CHECK(chromatic_number(Graph(5)) == 1);
    CHECK(chromatic_number(build({Family::Cycle, {5}})) == 3);
    CHECK(chromatic_number(build({Family::TuranGraph, {9, 3}})) == 3);
    CHECK_THROWS_AS(chromatic_number(Graph(17)), std::invalid_argument);
}

TEST_CASE("color-critical edges") {
    CHECK(color_critical_edges(resolve(Pattern::K3)).size() == 3);
    // B2: deleting the shared edge 0-1 leaves C4 (2-chromatic), any other
    // deletion keeps a triangle
    const auto crit = color_critical_edges(resolve(Pattern::B2));
    REQUIRE(crit.size() == 1);
    CHECK(crit[0] == std::pair<int, int>{0, 1});
    CHECK(color_critical_edges(resolve(Pattern::C4)).empty());
    CHECK(color_critical_edges(resolve(Pattern::K4)).size() == 6);
    // paw: the three triangle edges are critical, the pendant edge is not
    CHECK(color_critical_edges(resolve(Pattern::T1)).size() == 3);
}

TEST_CASE("blow-ups") {
    // B2 embeds into the (2,1,1) blow-up of K3
    CHECK(blowup_contains(resolve(Pattern::K3), resolve(Pattern::B2), 4));
    // blow-ups of P3 are bipartite, so no triangle
    CHECK(!blowup_contains(resolve(Pattern::P3), resolve(Pattern::K3), 3));
    CHECK(blowup_contains(resolve(Pattern::K3), resolve(Pattern::K3), 1));

    const Graph b = blowup(resolve(Pattern::K2), 3);
    CHECK(isomorphic(b, build({Family::CompleteBipartite, {3, 3}})));
}

TEST_CASE("multiplicity |V(f)| already decides blow-up containment") {
    // past t = |V(f)| the answer is stable; t = 4 covers every pattern pair
    for (Pattern h : kPatterns)
        for (Pattern f : kPatterns) {
            const bool at_vf =
                blowup_contains(resolve(h), resolve(f), pattern_vertices(f));
            CHECK(blowup_contains(resolve(h), resolve(f), 4) == at_vf);
            CHECK(blowup_contains(resolve(h), resolve(f), 5) == at_vf);
        }
}

TEST_CASE("pattern table") {
    for (Pattern p : kPatterns) {
        const Graph& g = resolve(p);
        CHECK(g.n() <= 4);
        for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) > 0); // no isolated vertices
        CHECK(pattern_from_name(pattern_name(p)) == p);
    }
    CHECK(isomorphic(resolve(Pattern::B2), build({Family::Book, {2}})));
    CHECK(!pattern_from_name("K5").has_value());
    // paw = triangle plus one pendant
    CHECK(resolve(Pattern::T1).edge_count() == 4);
    CHECK(contains_subgraph(resolve(Pattern::T1), resolve(Pattern::K3)));
}
