#include "gturan/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace gturan {

std::string_view cell_kind_name(CellKind k) {
    switch (k) {
    case CellKind::Zero: return "zero";
    case CellKind::Exact: return "exact";
    case CellKind::Asymptotic: return "asymptotic";
    case CellKind::BoundsOnly: return "bounds-only";
    }
    return "?";
}

std::string_view validity_name(Validity v) {
    switch (v) {
    case Validity::AllN: return "all-n";
    case Validity::NLargeEnough: return "n-large-enough";
    case Validity::KnownException: return "known-exception";
    }
    return "?";
}

std::vector<int> turan_part_sizes(int n, int r) {
    std::vector<int> parts(r);
    for (int i = 0; i < r; ++i) parts[i] = n / r + (i < n % r ? 1 : 0);
    return parts;
}

copy_count_t multipartite_pattern_count(Pattern p, const std::vector<int>& parts) {
    const size_t k = parts.size();
    copy_count_t n = 0;
    for (int s : parts) n += s;

    auto edges = [&]() {
        copy_count_t e = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j) e += copy_count_t(parts[i]) * parts[j];
        return e;
    };
    auto paths3 = [&]() {
        copy_count_t s = 0;
        for (size_t i = 0; i < k; ++i) s += copy_count_t(parts[i]) * binom(n - parts[i], 2);
        return s;
    };
    auto triangles = [&]() {
        copy_count_t s = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                for (size_t l = j + 1; l < k; ++l)
                    s += copy_count_t(parts[i]) * parts[j] * parts[l];
        return s;
    };

    switch (p) {
    case Pattern::K2: return edges();
    case Pattern::P3: return paths3();
    case Pattern::K3: return triangles();
    case Pattern::M2: return binom(edges(), 2) - paths3();
    case Pattern::S4: {
        copy_count_t s = 0;
        for (size_t i = 0; i < k; ++i) s += copy_count_t(parts[i]) * binom(n - parts[i], 3);
        return s;
    }
    case Pattern::P4: {
        copy_count_t s = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                s += copy_count_t(parts[i]) * parts[j] * (n - parts[i] - 1) * (n - parts[j] - 1);
        return s - 3 * triangles();
    }
    case Pattern::C4: {
        copy_count_t s = 0;
        for (size_t i = 0; i < k; ++i) s += binom(parts[i], 2) * binom(n - parts[i], 2);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                s += copy_count_t(parts[i]) * parts[j] * binom(n - parts[i] - parts[j], 2);
        return s / 2;
    }
    case Pattern::T1: {
        copy_count_t s = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                for (size_t l = j + 1; l < k; ++l)
                    s += copy_count_t(parts[i]) * parts[j] * parts[l] *
                         (3 * n - parts[i] - parts[j] - parts[l] - 6);
        return s;
    }
    case Pattern::B2: {
        copy_count_t s = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                s += copy_count_t(parts[i]) * parts[j] * binom(n - parts[i] - parts[j], 2);
        return s;
    }
    case Pattern::K4: {
        copy_count_t s = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                for (size_t l = j + 1; l < k; ++l)
                    for (size_t m = l + 1; m < k; ++m)
                        s += copy_count_t(parts[i]) * parts[j] * parts[l] * parts[m];
        return s;
    }
    }
    return 0;
}

namespace {

int isqrt(int x) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s;
}

} // namespace

int star_count_bipartite_argmin_part(int n) {
    // floor((n - sqrt(3n-4)) / 2) without floating point at the boundary
    const int d = 3 * n - 4;
    const int s = isqrt(d);
    if (s * s == d) return (n - s) / 2;
    if ((n - s) % 2 == 0) return (n - s) / 2 - 1;
    return (n - s - 1) / 2;
}

namespace {

// --- closed forms ------------------------------------------------------------

copy_count_t cf_half_n(int n) { return copy_count_t(n / 2); }
copy_count_t cf_quarter_n2(int n) { return copy_count_t(n) * n / 4; }
copy_count_t cf_n_minus_1(int n) { return copy_count_t(n - 1); }
copy_count_t cf_n(int n) { return copy_count_t(n); }
copy_count_t cf_one(int n) { return n >= 3 ? copy_count_t(1) : 0; }
copy_count_t cf_third_n(int n) { return copy_count_t(n / 3); }
copy_count_t cf_quarter_n(int n) { return copy_count_t(n / 4); }

copy_count_t cf_dgraph3_edges(int n) { return copy_count_t(3) * (n / 3) + (n % 3 == 2 ? 1 : 0); }
copy_count_t cf_turan3_edges(int n) { return multipartite_pattern_count(Pattern::K2, turan_part_sizes(n, 3)); }

copy_count_t cf_choose_nm1_2(int n) { return binom(copy_count_t(n - 1), 2); }
copy_count_t cf_choose_nm1_3(int n) { return binom(copy_count_t(n - 1), 3); }
copy_count_t cf_choose_half_2(int n) { return binom(copy_count_t(n / 2), 2); }
copy_count_t cf_choose_n_2_parity(int n) { return binom(copy_count_t(n), 2) - (n % 2 == 0 ? 1 : 0); }
copy_count_t cf_m2_two_regular(int n) { return copy_count_t(n) * (n - 3) / 2; }

copy_count_t cf_m2_dgraph3(int n) { return binom(cf_dgraph3_edges(n), 2) - 3 * copy_count_t(n / 3); }

copy_count_t cf_paw_friendship(int n) { return copy_count_t((n - 1) / 2) * (n - 3); }

template <Pattern P, int R> copy_count_t cf_turan(int n) {
    return multipartite_pattern_count(P, turan_part_sizes(n, R));
}

copy_count_t star_count_bipartite(int a, int n) {
    return copy_count_t(a) * binom(copy_count_t(n - a), 3) + copy_count_t(n - a) * binom(copy_count_t(a), 3);
}

copy_count_t cf_s4_trianglefree(int n) {
    const int k = star_count_bipartite_argmin_part(n);
    return std::max(star_count_bipartite(k, n), star_count_bipartite(k + 1, n));
}

// --- family generators --------------------------------------------------------

std::vector<FamilySpec> fam_turan2(int n) { return {{Family::TuranGraph, {n, 2}}}; }
std::vector<FamilySpec> fam_turan3(int n) { return {{Family::TuranGraph, {n, 3}}}; }
std::vector<FamilySpec> fam_dgraph2(int n) { return {{Family::DGraph, {2, n}}}; }
std::vector<FamilySpec> fam_dgraph3(int n) { return {{Family::DGraph, {3, n}}}; }
std::vector<FamilySpec> fam_star(int n) { return {{Family::Star, {n}}}; }
std::vector<FamilySpec> fam_friendship(int n) { return {{Family::Friendship, {n}}}; }
std::vector<FamilySpec> fam_cycle(int n) { return {{Family::TwoRegularTriangleFree, {n}}}; }
std::vector<FamilySpec> fam_matching(int n) { return {{Family::Matching, {n / 2}}}; }
std::vector<FamilySpec> fam_ggraph31(int n) { return {{Family::GGraph, {n, 3, 1}}}; }
std::vector<FamilySpec> fam_clique1(int n) { return {{Family::CliquePlusIndependent, {1, n - 1}}}; }
std::vector<FamilySpec> fam_bipartite_pair(int n) {
    const int k = star_count_bipartite_argmin_part(n);
    return {{Family::CompleteBipartite, {k, n - k}}, {Family::CompleteBipartite, {k + 1, n - k - 1}}};
}
std::vector<FamilySpec> fam_rs_witness(int n) { return {{Family::RSTriangleGraph, {std::max(1, n / 6)}}}; }

// --- table -------------------------------------------------------------------

struct CellInit {
    Pattern h, f;
    OracleEntry e;
};

std::vector<OracleEntry> build_table() {
    std::vector<OracleEntry> cells;
    cells.reserve(100);
    for (Pattern h : kPatterns)
        for (Pattern f : kPatterns) {
            OracleEntry e;
            e.h = h;
            e.f = f;
            e.kind = CellKind::Zero;
            e.citation = "containment";
            cells.push_back(e);
        }

    auto set = [&](Pattern h, Pattern f, OracleEntry e) {
        e.h = h;
        e.f = f;
        cells[static_cast<size_t>(h) * 10 + static_cast<size_t>(f)] = e;
    };
    auto exact = [](copy_count_t (*cf)(int), Validity v, const char* cite) {
        OracleEntry e;
        e.kind = CellKind::Exact;
        e.validity = v;
        e.closed_form = cf;
        e.citation = cite;
        return e;
    };

    using P = Pattern;
    OracleEntry e;

    // --- row K2: edge counts -------------------------------------------------
    e = exact(cf_half_n, Validity::AllN, "Faudree-Schelp");
    e.families = fam_dgraph2;
    e.family_min_n = 2;
    set(P::K2, P::P3, e);

    e = exact(cf_quarter_n2, Validity::AllN, "Turan");
    e.families = fam_turan2;
    e.family_min_n = 2;
    e.full_power = true;
    set(P::K2, P::K3, e);

    e = exact(cf_n_minus_1, Validity::KnownException, "Erdos-Gallai");
    e.exceptions = {{3, 3}};
    e.families = fam_clique1;
    e.family_min_n = 2;
    e.note = "a triangle beats the star bound at n=3; n-1 resumes at n=4";
    set(P::K2, P::M2, e);

    e = exact(cf_n, Validity::NLargeEnough, "star degree bound");
    e.threshold = 3;
    e.families = fam_cycle;
    e.family_min_n = 4;
    e.note = "an n-edge host must be 2-regular, which first exists at n=3";
    set(P::K2, P::S4, e);

    e = exact(cf_dgraph3_edges, Validity::AllN, "Faudree-Schelp");
    e.families = fam_dgraph3;
    e.family_min_n = 2;
    set(P::K2, P::P4, e);

    e = OracleEntry{};
    e.kind = CellKind::Asymptotic;
    e.coeff = 0.5;
    e.expo = 1.5;
    e.citation = "Furedi";
    set(P::K2, P::C4, e);

    e = exact(cf_quarter_n2, Validity::NLargeEnough, "Simonovits critical edge");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 2;
    e.full_power = true;
    set(P::K2, P::T1, e);
    set(P::K2, P::B2, e);

    e = exact(cf_turan3_edges, Validity::AllN, "Turan");
    e.families = fam_turan3;
    e.family_min_n = 2;
    e.full_power = true;
    set(P::K2, P::K4, e);

    // --- row P3 ----------------------------------------------------------------
    e = exact(cf_turan<P::P3, 2>, Validity::NLargeEnough, "Gyori-Pach-Simonovits");
    e.threshold = 3;
    e.families = fam_turan2;
    e.family_min_n = 3;
    e.full_power = true;
    set(P::P3, P::K3, e);

    e = exact(cf_choose_nm1_2, Validity::KnownException, "star/triangle components");
    e.exceptions = {{3, 3}};
    e.families = fam_star;
    e.family_min_n = 3;
    set(P::P3, P::M2, e);

    e = exact(cf_n, Validity::AllN, "two-regular host");
    e.families = fam_cycle;
    e.family_min_n = 4;
    set(P::P3, P::S4, e);

    e = exact(cf_choose_nm1_2, Validity::NLargeEnough, "Gyori-Salia-Tompkins-Zamora");
    e.threshold = 4;
    e.families = fam_ggraph31;
    e.family_min_n = 3;
    e.note = "the triangle beats the star at n=3";
    set(P::P3, P::P4, e);

    e = exact(cf_choose_n_2_parity, Validity::AllN, "friendship bound");
    e.families = fam_friendship;
    e.family_min_n = 3;
    set(P::P3, P::C4, e);

    e = exact(cf_turan<P::P3, 2>, Validity::NLargeEnough, "pendant-clique reduction");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 3;
    e.full_power = true;
    set(P::P3, P::T1, e);

    e = exact(cf_turan<P::P3, 2>, Validity::NLargeEnough, "progressive induction, critical edge");
    e.threshold = 6;
    e.families = fam_turan2;
    e.family_min_n = 3;
    e.full_power = true;
    e.note = "the friendship graph F(5) has 10 > 9 copies at n=5";
    set(P::P3, P::B2, e);

    e = exact(cf_turan<P::P3, 3>, Validity::NLargeEnough, "Gyori-Pach-Simonovits");
    e.threshold = 3;
    e.families = fam_turan3;
    e.family_min_n = 3;
    e.full_power = true;
    set(P::P3, P::K4, e);

    // --- row K3 ----------------------------------------------------------------
    e = exact(cf_one, Validity::AllN, "Wang");
    set(P::K3, P::M2, e);

    e = exact(cf_third_n, Validity::AllN, "Chase");
    e.families = fam_dgraph3;
    e.family_min_n = 3;
    set(P::K3, P::S4, e);

    e = exact(cf_third_n, Validity::AllN, "Chakraborti-Chen");
    e.families = fam_dgraph3;
    e.family_min_n = 3;
    set(P::K3, P::P4, e);

    e = OracleEntry{};
    e.kind = CellKind::Asymptotic;
    e.coeff = 1.0 / 6.0;
    e.expo = 1.5;
    e.citation = "Alon-Shikhelman";
    set(P::K3, P::C4, e);

    e = exact(cf_third_n, Validity::AllN, "disjoint triangles");
    e.families = fam_dgraph3;
    e.family_min_n = 3;
    set(P::K3, P::T1, e);

    e = OracleEntry{};
    e.kind = CellKind::BoundsOnly;
    e.lower_bound = "n^(2-o(1))";
    e.upper_bound = "o(n^2)";
    e.expo = 2.0; // ratio denominator for the report
    e.families = fam_rs_witness;
    e.family_min_n = 6;
    e.citation = "Alon-Shikhelman";
    set(P::K3, P::B2, e);

    e = exact(cf_turan<P::K3, 3>, Validity::NLargeEnough, "Zykov");
    e.threshold = 3;
    e.families = fam_turan3;
    e.family_min_n = 3;
    e.full_power = true;
    set(P::K3, P::K4, e);

    // --- row M2 ----------------------------------------------------------------
    e = exact(cf_choose_half_2, Validity::AllN, "matching components");
    e.families = fam_matching;
    e.family_min_n = 4;
    set(P::M2, P::P3, e);

    e = exact(cf_turan<P::M2, 2>, Validity::NLargeEnough, "Gerbner-Methuku-Vizer");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::M2, P::K3, e);

    e = exact(cf_m2_two_regular, Validity::AllN, "two-regular host");
    e.families = fam_cycle;
    e.family_min_n = 4;
    set(P::M2, P::S4, e);

    e = exact(cf_m2_dgraph3, Validity::KnownException, "triangle-or-star components");
    e.exceptions = {{4, 1}};
    e.families = fam_dgraph3;
    e.family_min_n = 4;
    e.note = "at n=4 the matching M2 itself is extremal while D(3,4) has no M2";
    set(P::M2, P::P4, e);

    e = OracleEntry{};
    e.kind = CellKind::Asymptotic;
    e.coeff = 0.125;
    e.expo = 3.0;
    e.citation = "matching power bound";
    set(P::M2, P::C4, e);

    e = exact(cf_turan<P::M2, 2>, Validity::NLargeEnough, "matching, critical edge");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::M2, P::T1, e);
    set(P::M2, P::B2, e);

    e = exact(cf_turan<P::M2, 3>, Validity::NLargeEnough, "matching, critical edge");
    e.threshold = 4;
    e.families = fam_turan3;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::M2, P::K4, e);

    // --- row S4 ----------------------------------------------------------------
    e = exact(cf_s4_trianglefree, Validity::NLargeEnough, "Brown-Sidorenko inducibility");
    e.threshold = 4;
    e.families = fam_bipartite_pair;
    e.family_min_n = 4;
    e.full_power = true;
    e.note = "argmin part k = floor((n - sqrt(3n-4))/2); reading the radical as "
             "sqrt((3n-4)/2) mislocates the maximizer (n=20: argmax 6, not 4)";
    set(P::S4, P::K3, e);

    e = exact(cf_choose_nm1_3, Validity::AllN, "star/triangle components");
    e.families = fam_star;
    e.family_min_n = 4;
    set(P::S4, P::M2, e);

    e = exact(cf_choose_nm1_3, Validity::AllN, "Gyori-Salia-Tompkins-Zamora");
    e.families = fam_star;
    e.family_min_n = 4;
    set(P::S4, P::P4, e);

    e = exact(cf_choose_nm1_3, Validity::AllN, "star in C4-free");
    e.families = fam_star;
    e.family_min_n = 4;
    set(P::S4, P::C4, e);

    e = exact(cf_s4_trianglefree, Validity::NLargeEnough, "pendant-clique reduction");
    e.threshold = 4;
    e.families = fam_bipartite_pair;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::S4, P::T1, e);

    e = exact(cf_s4_trianglefree, Validity::NLargeEnough, "progressive induction, critical edge");
    e.threshold = 4;
    e.families = fam_bipartite_pair;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::S4, P::B2, e);

    e = exact(cf_turan<P::S4, 3>, Validity::NLargeEnough, "multipartite optimization");
    e.threshold = 4;
    e.families = fam_turan3;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::S4, P::K4, e);

    // --- row P4 ----------------------------------------------------------------
    e = exact(cf_turan<P::P4, 2>, Validity::NLargeEnough, "Gyori-Pach-Simonovits");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::P4, P::K3, e);

    e = exact(cf_n, Validity::AllN, "two-regular host");
    e.families = fam_cycle;
    e.family_min_n = 4;
    set(P::P4, P::S4, e);

    e = OracleEntry{};
    e.kind = CellKind::Asymptotic;
    e.coeff = 0.5;
    e.expo = 2.5;
    e.citation = "Gerbner-Palmer";
    set(P::P4, P::C4, e);

    e = exact(cf_turan<P::P4, 2>, Validity::NLargeEnough, "pendant-clique reduction");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::P4, P::T1, e);

    e = exact(cf_turan<P::P4, 2>, Validity::NLargeEnough, "Gerbner-Palmer");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::P4, P::B2, e);

    e = exact(cf_turan<P::P4, 3>, Validity::NLargeEnough, "induced-count identities");
    e.threshold = 4;
    e.families = fam_turan3;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::P4, P::K4, e);

    // --- row C4 ----------------------------------------------------------------
    e = exact(cf_turan<P::C4, 2>, Validity::NLargeEnough, "Gyori-Pach-Simonovits");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::C4, P::K3, e);

    e = exact(cf_quarter_n, Validity::AllN, "disjoint 2-regular copies");
    set(P::C4, P::S4, e);

    e = exact(cf_turan<P::C4, 2>, Validity::NLargeEnough, "pendant-clique reduction");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::C4, P::T1, e);

    e = exact(cf_turan<P::C4, 2>, Validity::NLargeEnough, "Gerbner-Palmer");
    e.threshold = 4;
    e.families = fam_turan2;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::C4, P::B2, e);

    e = exact(cf_turan<P::C4, 3>, Validity::NLargeEnough, "Gyori-Pach-Simonovits");
    e.threshold = 4;
    e.families = fam_turan3;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::C4, P::K4, e);

    // --- row T1 ----------------------------------------------------------------
    e = exact(cf_paw_friendship, Validity::NLargeEnough, "friendship bound");
    e.threshold = 4;
    e.families = fam_friendship;
    e.family_min_n = 4;
    e.note = "alternate even-case closed form C(n,2)-2n-3 disagrees with the "
             "friendship-graph count (n-2)(n-3)/2 = C(n,2)-(2n-3); the count is used";
    set(P::T1, P::C4, e);

    e = OracleEntry{};
    e.kind = CellKind::BoundsOnly;
    e.lower_bound = "n^(3-o(1))";
    e.upper_bound = "o(n^3)";
    e.expo = 3.0;
    e.families = fam_rs_witness;
    e.family_min_n = 6;
    e.citation = "Ruzsa-Szemeredi";
    set(P::T1, P::B2, e);

    e = exact(cf_turan<P::T1, 3>, Validity::NLargeEnough, "Gerbner-Palmer pendant clique");
    e.threshold = 4;
    e.families = fam_turan3;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::T1, P::K4, e);

    // --- row B2 ----------------------------------------------------------------
    e = exact(cf_turan<P::B2, 3>, Validity::NLargeEnough, "Gyori-Pach-Simonovits");
    e.threshold = 4;
    e.families = fam_turan3;
    e.family_min_n = 4;
    e.full_power = true;
    set(P::B2, P::K4, e);

    return cells;
}

} // namespace

const std::vector<OracleEntry>& oracle_table() {
    static const std::vector<OracleEntry> table = build_table();
    return table;
}

const OracleEntry& lookup(Pattern h, Pattern f) {
    return oracle_table()[static_cast<size_t>(h) * 10 + static_cast<size_t>(f)];
}

OracleValue evaluate(Pattern h, Pattern f, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const OracleEntry& e = lookup(h, f);
    OracleValue v;
    v.kind = e.kind;
    switch (e.kind) {
    case CellKind::Zero: break;
    case CellKind::Exact: {
        if (n < pattern_vertices(h)) break; // no room for a single copy
        bool overridden = false;
        for (auto [en, ev] : e.exceptions)
            if (en == n) {
                v.exact = ev;
                v.exception_applied = true;
                overridden = true;
            }
        if (!overridden) v.exact = e.closed_form(n);
        if (e.validity == Validity::NLargeEnough) v.threshold = e.threshold;
        break;
    }
    case CellKind::Asymptotic:
        v.coeff = e.coeff;
        v.expo = e.expo;
        break;
    case CellKind::BoundsOnly:
        v.lower_bound = e.lower_bound;
        v.upper_bound = e.upper_bound;
        break;
    }
    return v;
}

} // namespace gturan
