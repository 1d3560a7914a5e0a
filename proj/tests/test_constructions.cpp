#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "gturan/constructions.hpp"
#include "gturan/counting.hpp"
#include "gturan/oracle.hpp"

using namespace gturan;

TEST_CASE("build: pinned shapes") {
    CHECK(isomorphic(build({Family::TuranGraph, {9, 3}}),
                     build({Family::CompleteMultipartite, {3, 3, 3}})));

    const Graph d37 = build({Family::DGraph, {3, 7}});
    const Graph two_triangles = Graph::from_edge_list(
        7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(isomorphic(d37, two_triangles));

    // G(8,3,1) collapses to the star on 8 vertices
    CHECK(isomorphic(build({Family::GGraph, {8, 3, 1}}), build({Family::Star, {8}})));

    // F(6): universal vertex, two matching edges, one pendant
    const Graph f6 = build({Family::Friendship, {6}});
    CHECK(f6.degree(0) == 5);
    CHECK(f6.edge_count() == 7);
    CHECK(count_copies(Pattern::K3, f6) == 2);
    CHECK(f6.degree(5) == 1);

    CHECK(isomorphic(build({Family::Book, {2}}), resolve(Pattern::B2)));
    CHECK(isomorphic(build({Family::TGraph, {1}}), resolve(Pattern::T1)));
    CHECK(isomorphic(build({Family::CliquePlusIndependent, {1, 4}}), build({Family::Star, {5}})));
    CHECK(isomorphic(build({Family::Matching, {2}}), resolve(Pattern::M2)));
}

TEST_CASE("defining properties") {
    for (int n : {5, 6, 9, 12}) {
        const FamilySpec fr{Family::Friendship, {n}};
        CHECK(defining_property_check(fr, build(fr)));
    }
    const FamilySpec rs{Family::RSTriangleGraph, {8}};
    CHECK(defining_property_check(rs, build(rs)));

    const FamilySpec c5{Family::TwoRegularTriangleFree, {5}};
    CHECK(isomorphic(build(c5), build({Family::Cycle, {5}})));
    CHECK(defining_property_check(c5, build(c5)));

    for (int n : {6, 7, 10}) {
        const FamilySpec d{Family::DGraph, {3, n}};
        CHECK(defining_property_check(d, build(d)));
    }
    const FamilySpec gg{Family::GGraph, {9, 3, 1}};
    CHECK(defining_property_check(gg, build(gg)));

    // a doctored graph must fail its check
    Graph bad = build({Family::Friendship, {7}});
    bad.add_edge(1, 3);
    CHECK(!defining_property_check({Family::Friendship, {7}}, bad));
}

TEST_CASE("build is deterministic") {
    for (const FamilySpec& spec : std::vector<FamilySpec>{{Family::TuranGraph, {10, 3}},
                                   {Family::Friendship, {9}},
                                   {Family::RSTriangleGraph, {6}},
                                   {Family::GGraph, {9, 3, 1}}}) {
        CHECK(build(spec) == build(spec));
    }
}

TEST_CASE("Turan graph edge counts match the closed form") {
    for (int n = 1; n <= 30; ++n)
        for (int r = 1; r <= 4; ++r) {
            const Graph t = build({Family::TuranGraph, {n, r}});
            CHECK(copy_count_t(t.edge_count()) ==
                  multipartite_pattern_count(Pattern::K2, turan_part_sizes(n, r)));
            if (r == 2) CHECK(t.edge_count() == n * n / 4);
        }
}

TEST_CASE("RS triangle graph: edge and triangle counts") {
    for (int m : {1, 2, 4, 8, 12}) {
        const Graph g = build({Family::RSTriangleGraph, {m}});
        const auto s = greedy_progression_free_set(m);
        CHECK(copy_count_t(g.edge_count()) == copy_count_t(3) * m * s.size());
        CHECK(count_copies(Pattern::K3, g) == copy_count_t(m) * s.size());
    }
}

TEST_CASE("greedy progression-free set") {
    const auto s = greedy_progression_free_set(14);
    CHECK(s == std::vector<int>{0, 1, 3, 4, 9, 10, 12, 13});
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            for (size_t l = j + 1; l < s.size(); ++l) CHECK(s[i] + s[l] != 2 * s[j]);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build({Family::TuranGraph, {5, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::TwoRegularTriangleFree, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::GGraph, {3, 3, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::Friendship, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::RSTriangleGraph, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(build({Family::TuranGraph, {5}}), std::invalid_argument);
}

TEST_CASE("family spec round trip") {
    const FamilySpec spec{Family::DGraph, {3, 10}};
    CHECK(family_spec_to_string(spec) == "dgraph(3,10)");
    CHECK(parse_family_spec("dgraph", {3, 10}) == spec);
    CHECK_THROWS_AS(parse_family_spec("nonsense", {}), std::invalid_argument);
}
