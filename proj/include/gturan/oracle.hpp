#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gturan/constructions.hpp"
#include "gturan/graph.hpp"

namespace gturan {

enum class CellKind : uint8_t { Zero, Exact, Asymptotic, BoundsOnly };
enum class Validity : uint8_t { AllN, NLargeEnough, KnownException };

std::string_view cell_kind_name(CellKind k);
std::string_view validity_name(Validity v);

// One cell of the 10x10 table of generalized Turan numbers ex(n, h, f).
struct OracleEntry {
    Pattern h;
    Pattern f;
    CellKind kind = CellKind::Zero;
    Validity validity = Validity::AllN;

    // Exact cells: closed-form value of ex(n, h, f) once n is past any
    // threshold/exceptions. Null for Zero/Asymptotic/BoundsOnly.
    copy_count_t (*closed_form)(int n) = nullptr;
    // Extremal construction(s) attaining the value (or a lower-bound witness
    // for BoundsOnly cells). Null when the value is not construction-backed.
    std::vector<FamilySpec> (*families)(int n) = nullptr;
    int family_min_n = 0;

    // KnownException: (n, value) overrides of the closed form.
    std::vector<std::pair<int, copy_count_t>> exceptions;
    // NLargeEnough: least n0 <= 9 from which exhaustive search agrees with
    // the closed form, measured by the verify harness and pinned here.
    int threshold = 0;

    // Asymptotic cells: ex(n,h,f) = (coeff + o(1)) * n^expo.
    double coeff = 0.0, expo = 0.0;
    // BoundsOnly cells: order-of-magnitude brackets.
    const char* lower_bound = "";
    const char* upper_bound = "";

    // Whether the extremal family has N(h, .) growing as the full power
    // n^{|V(h)|}; exactly the cells where f embeds in no blow-up of h.
    bool full_power = false;

    const char* citation = "";
    const char* note = "";
};

struct OracleValue {
    CellKind kind = CellKind::Zero;
    copy_count_t exact = 0;          // Zero/Exact
    bool exception_applied = false;
    std::optional<int> threshold;    // NLargeEnough cells
    double coeff = 0.0, expo = 0.0;  // Asymptotic
    std::string lower_bound, upper_bound; // BoundsOnly
};

const std::vector<OracleEntry>& oracle_table(); // all 100 ordered pairs
const OracleEntry& lookup(Pattern h, Pattern f);
OracleValue evaluate(Pattern h, Pattern f, int n);

// Closed-form copy counts in complete multipartite graphs, the second code
// path behind every Turan-graph-valued cell.
copy_count_t multipartite_pattern_count(Pattern p, const std::vector<int>& parts);
std::vector<int> turan_part_sizes(int n, int r);

// floor(n/2 - sqrt(3n-4)/2), the smaller part of the bipartite maximizer for
// star counts in triangle-free graphs (computed in exact integer arithmetic).
int star_count_bipartite_argmin_part(int n);

} // namespace gturan
