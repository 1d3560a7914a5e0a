// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Default sweep is n <= 9; --nmax lowers it for quick runs.

#include <cstdio>
#include <cstring>
#include <random>
#include <string>

#include "brute.hpp"
#include "gturan/constructions.hpp"
#include "gturan/counting.hpp"
#include "gturan/io.hpp"
#include "gturan/oracle.hpp"
#include "gturan/search.hpp"
#include "gturan/symmetrize.hpp"
#include "gturan/verify.hpp"

using namespace gturan;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    printf("%s  criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    fflush(stdout);
    if (!pass) ++failures;
}

const CellReport& cell_of(const VerificationReport& rep, Pattern h, Pattern f) {
    return rep.cells[static_cast<size_t>(h) * 10 + static_cast<size_t>(f)];
}

// 1. every Exact cell with validity AllN (or KnownException, after applying
//    the exceptions) matches search for every n in range; zero cells are zero
void criterion_full_table(const VerificationReport& rep) {
    bool ok = rep.all_pass;
    for (const std::string& f : rep.failures) printf("      %s\n", f.c_str());
    // spot values: n(n-3)/2 matchings under a forbidden star at n = 9
    if (rep.n_max >= 9) {
        const CellReport& c = cell_of(rep, Pattern::M2, Pattern::S4);
        bool spot = false;
        for (const CellRow& row : c.rows)
            if (row.n == 9 && row.agree && row.oracle_value == 27 && row.search_max == 27)
                spot = true;
        ok = ok && spot;
    }
    report(1, ok, "full-table verification, oracle == search for all n <= " +
                      std::to_string(rep.n_max));
}

// 2. ex(4, M2, P4) = 1 while N(M2, D(3,4)) = 0: reported as exception
void criterion_exception(const VerificationReport& rep) {
    const CellReport& c = cell_of(rep, Pattern::M2, Pattern::P4);
    bool ok = c.pass;
    ok = ok && !c.rows.empty() && c.rows[0].n == 4 && c.rows[0].exception_applied &&
         c.rows[0].agree && c.rows[0].search_max == 1;
    ok = ok && count_copies(Pattern::M2, build({Family::DGraph, {3, 4}})) == 0;
    bool noted = false;
    for (const std::string& note : c.notes)
        if (note.find("exceptional value at n=4") != std::string::npos) noted = true;
    report(2, ok && noted, "ex(4,M2,P4)=1 reported as a known exception, not a failure");
}

// 3. friendship-graph extremality for P3 and T1 under forbidden C4, n = 5..9,
//    with the even-case paw count tied to the construction
void criterion_friendship(const VerificationReport& rep) {
    bool ok = true;
    const CellReport& p3 = cell_of(rep, Pattern::P3, Pattern::C4);
    const CellReport& t1 = cell_of(rep, Pattern::T1, Pattern::C4);
    for (int n = 5; n <= rep.n_max; ++n) {
        const copy_count_t expect_p3 = binom(n, 2) - (n % 2 == 0 ? 1 : 0);
        const copy_count_t expect_t1 = count_copies(Pattern::T1, build({Family::Friendship, {n}}));
        for (const CellRow& row : p3.rows)
            if (row.n == n) ok = ok && row.agree && row.search_max == expect_p3;
        for (const CellRow& row : t1.rows)
            if (row.n == n) ok = ok && row.agree && row.search_max == expect_t1;
    }
    // the conflicting printed even-case form is documented in the report
    bool documented = false;
    for (const std::string& note : t1.notes)
        if (note.find("C(n,2)-2n-3") != std::string::npos) documented = true;
    report(3, ok && documented,
           "friendship extremality for (P3,C4) and (T1,C4), n=5.." +
               std::to_string(rep.n_max) + ", display discrepancy documented");
}

// 4. every NLargeEnough cell gets a measured threshold that matches the pinned
//    one, (P3,B2) disagrees at n=5, and thresholds are stable across reruns
void criterion_thresholds(const VerificationReport& rep) {
    bool ok = true;
    for (const CellReport& c : rep.cells) {
        if (c.kind != CellKind::Exact || c.validity != Validity::NLargeEnough) continue;
        if (!c.measured_threshold) {
            printf("      %s/%s: no agreement below n=%d\n",
                   std::string(pattern_name(c.h)).c_str(), std::string(pattern_name(c.f)).c_str(),
                   rep.n_max);
            ok = false;
            continue;
        }
        if (rep.n_max >= 9 && *c.measured_threshold != c.pinned_threshold) ok = false;
    }
    const CellReport& p3b2 = cell_of(rep, Pattern::P3, Pattern::B2);
    bool bowtie = false;
    for (const CellRow& row : p3b2.rows)
        if (row.n == 5 && !row.agree && row.search_max == 10 && row.oracle_value == 9)
            bowtie = true;
    ok = ok && bowtie;

    const VerificationReport rerun = verify_table(rep.n_max, {}, 1);
    ok = ok && report_thresholds(rerun) == report_thresholds(rep);
    report(4, ok, "measured thresholds match pins, bowtie shows at (P3,B2,5), stable on rerun");
}

// 5. the degree/codegree counter equals the embedding counter on 1000 random
//    graphs, n <= 12, densities 0.1..0.9
void criterion_dual_counters() {
    std::mt19937_64 rng(2024);
    bool ok = true;
    for (int round = 0; round < 1000; ++round) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const double p = 0.1 + 0.1 * static_cast<double>(round % 9);
        const Graph g = brute::random_graph(rng, n, p);
        const auto fast = count_all_fast(g);
        for (Pattern h : kPatterns)
            if (fast[static_cast<size_t>(h)] != count_copies(h, g)) ok = false;
    }
    report(5, ok, "count_copies_fast == count_copies on 1000 random graphs, n <= 12");
}

// 6. 500 random symmetrization runs: clique-freeness preserved at every step,
//    monotone counts for complete multipartite targets, complete multipartite
//    final graphs, and the preserving variant keeps A independent
void criterion_symmetrize() {
    const Pattern targets[] = {Pattern::K2, Pattern::P3, Pattern::K3,
                               Pattern::C4, Pattern::S4, Pattern::B2};
    std::mt19937_64 rng(77);
    int violations = 0;
    for (int run = 0; run < 500; ++run) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const int k = (run % 2 == 0) ? 3 : 4;
        const Pattern h = targets[run % 6];
        const double p = 0.2 + 0.1 * static_cast<double>(run % 6);
        const Graph g = brute::make_clique_free(rng, brute::random_graph(rng, n, p), k);
        const Graph clique = k == 3 ? resolve(Pattern::K3) : resolve(Pattern::K4);

        if (run % 2 == 0) {
            const SymmetrizationTrace t = run_to_multipartite(g, h);
            Graph cur = g;
            for (const SymStep& s : t.steps) {
                cur = s.u_to_v ? symmetrize_step(cur, s.u, s.v) : symmetrize_step(cur, s.v, s.u);
                if (contains_subgraph(cur, clique)) ++violations;
                if (s.count_after < s.count_before) ++violations;
                if (count_copies_fast(h, cur) != s.count_after) ++violations;
            }
            if (!(cur == t.final)) ++violations;
            if (!is_complete_multipartite(t.final)) ++violations;
            if (count_copies_fast(h, t.final) < count_copies_fast(h, g)) ++violations;
        } else {
            const auto a = brute::random_independent_set(rng, g);
            const SymmetrizationTrace t = run_preserving_independent_set(g, h, a);
            Graph cur = g;
            for (const SymStep& s : t.steps) {
                cur = s.u_to_v ? symmetrize_step(cur, s.u, s.v) : symmetrize_step(cur, s.v, s.u);
                if (contains_subgraph(cur, clique)) ++violations;
                if (s.count_after < s.count_before) ++violations;
                for (size_t i = 0; i < a.size(); ++i)
                    for (size_t j = i + 1; j < a.size(); ++j)
                        if (cur.has_edge(a[i], a[j])) ++violations;
            }
            if (!is_complete_multipartite(t.final)) ++violations;
            // A ends up inside one part: equal neighborhoods across A
            for (size_t i = 1; i < a.size(); ++i)
                for (int w = 0; w < t.final.n(); ++w) {
                    if (w == a[0] || w == a[i]) continue;
                    if (t.final.has_edge(a[0], w) != t.final.has_edge(a[i], w)) ++violations;
                }
        }
    }
    report(6, violations == 0,
           "500 random symmetrization runs, zero violations (" + std::to_string(violations) +
               " found)");
}

// 7. blow-up criterion: f embeds in a blow-up of h exactly when the cell's
//    extremal growth is below the full power n^{|V(h)|}
void criterion_blowup() {
    bool ok = true;
    for (const OracleEntry& e : oracle_table()) {
        const bool embeds = blowup_contains(resolve(e.h), resolve(e.f), pattern_vertices(e.f));
        const bool expected = e.kind == CellKind::Zero ? true : !e.full_power;
        if (embeds != expected) {
            printf("      %s/%s: blow-up containment %d, growth classification expects %d\n",
                   std::string(pattern_name(e.h)).c_str(), std::string(pattern_name(e.f)).c_str(),
                   embeds, expected);
            ok = false;
        }
    }
    report(7, ok, "blow-up containment matches full-power growth on all 100 cells");
}

// 8. in every C4-free graph on n <= 8: 2 N(P4) <= n|E| and 3 N(K3) <= |E|
void criterion_c4free_inequalities() {
    uint64_t checked = 0;
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        enumerate_f_free(n, Pattern::C4, false, [&](const Graph& g) {
            ++checked;
            const auto c = count_all_fast(g);
            const copy_count_t m = g.edge_count();
            if (2 * c[static_cast<size_t>(Pattern::P4)] > copy_count_t(n) * m) ok = false;
            if (3 * c[static_cast<size_t>(Pattern::K3)] > m) ok = false;
        });
    }
    report(8, ok, "C4-free counting inequalities over " + std::to_string(checked) +
                      " graphs, n <= 8");
}

// 9. induced-count identities in every K4-free graph on n <= 8
void criterion_induced_identities() {
    uint64_t checked = 0;
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        enumerate_f_free(n, Pattern::K4, false, [&](const Graph& g) {
            ++checked;
            const copy_count_t a = count_induced(Pattern::B2, g);
            const copy_count_t b = count_induced(Pattern::C4, g);
            const copy_count_t c = count_induced(Pattern::T1, g);
            const copy_count_t d = count_induced(Pattern::P4, g);
            const copy_count_t e = count_induced(Pattern::M2, g);
            if (count_copies_fast(Pattern::M2, g) != 2 * a + 2 * b + c + d + e) ok = false;
            if (count_copies_fast(Pattern::P4, g) != 6 * a + 4 * b + 2 * c + d) ok = false;
        });
    }
    report(9, ok, "induced-count identities over " + std::to_string(checked) +
                      " K4-free graphs, n <= 8");
}

// 10. the bipartite star-count maximizer sits at k or k+1 for n in [20, 200]
void criterion_argmax() {
    auto stars = [](int a, int n) {
        return copy_count_t(a) * binom(n - a, 3) + copy_count_t(n - a) * binom(a, 3);
    };
    bool ok = true;
    for (int n = 20; n <= 200; ++n) {
        copy_count_t best = 0;
        int arg = 0;
        for (int a = 0; a <= n / 2; ++a)
            if (stars(a, n) > best) {
                best = stars(a, n);
                arg = a;
            }
        const int k = star_count_bipartite_argmin_part(n);
        if (arg != k && arg != k + 1) {
            printf("      n=%d: argmax %d not in {%d,%d}\n", n, arg, k, k + 1);
            ok = false;
        }
    }
    report(10, ok, "bipartite star-count maximizer in {k, k+1} for all n in [20,200]");
}

// not numerically reproducible cells: tabulate search / leading-term ratios
// and check the lower-bound witness construction
void descriptor_report(const VerificationReport& rep) {
    printf("\nasymptotic and bounds-only cells (search max / leading term):\n");
    for (const CellReport& c : rep.cells) {
        if (c.kind != CellKind::Asymptotic && c.kind != CellKind::BoundsOnly) continue;
        printf("  %s/%-3s", std::string(pattern_name(c.h)).c_str(),
               std::string(pattern_name(c.f)).c_str());
        for (const CellRow& row : c.rows) printf("  n=%d:%.3f", row.n, row.ratio);
        printf("\n");
    }
    bool witness = true;
    for (int m : {4, 8, 16, 32}) {
        const FamilySpec spec{Family::RSTriangleGraph, {m}};
        if (!defining_property_check(spec, build(spec))) witness = false;
    }
    printf("  lower-bound witness: every edge in exactly one triangle: %s\n\n",
           witness ? "ok" : "VIOLATED");
    if (!witness) ++failures;
}

} // namespace

int main(int argc, char** argv) {
    int n_max = 9;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--nmax") == 0 && i + 1 < argc) n_max = std::atoi(argv[i + 1]);

    printf("acceptance sweep, n <= %d\n\n", n_max);
    const VerificationReport rep = verify_table(n_max, {}, 1);

    criterion_full_table(rep);
    criterion_exception(rep);
    criterion_friendship(rep);
    criterion_thresholds(rep);
    criterion_dual_counters();
    criterion_symmetrize();
    criterion_blowup();
    criterion_c4free_inequalities();
    criterion_induced_identities();
    criterion_argmax();
    descriptor_report(rep);

    if (failures > 0) {
        printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    printf("all criteria passed\n");
    return 0;
}
