#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gturan/oracle.hpp"
#include "gturan/search.hpp"

namespace gturan {

struct CellRow {
    int n = 0;
    bool has_oracle_value = false; // Exact/Zero rows carry a number
    copy_count_t oracle_value = 0;
    copy_count_t search_max = 0;
    bool agree = false;
    bool exception_applied = false;
    double ratio = 0.0; // Asymptotic/BoundsOnly: search / (coeff * n^expo)
};

struct CellReport {
    Pattern h = Pattern::K2, f = Pattern::K2;
    CellKind kind = CellKind::Zero;
    Validity validity = Validity::AllN;
    int pinned_threshold = 0;
    std::optional<int> measured_threshold;
    std::vector<CellRow> rows;
    std::vector<std::string> notes;
    bool pass = true;
    // scan time behind this cell's rows (shared across the ten h-rows of the
    // same forbidden pattern); timing stays out of the deterministic payload
    double seconds = 0.0;
};

struct VerificationReport {
    int n_max = 0;
    bool all_pass = true;
    bool budget_exceeded = false;
    std::vector<CellReport> cells; // all requested cells in (h, f) order
    std::vector<std::string> failures;
    double seconds = 0.0; // timing lives apart from the deterministic payload
};

// Compares the oracle against exhaustive search for every requested cell and
// every n in [|V(h)|, n_max]. AllN/KnownException cells must agree exactly;
// NLargeEnough cells record the least n0 from which search and oracle agree
// and check it against the pinned threshold; Zero cells are asserted to be
// literally zero; Asymptotic/BoundsOnly cells get ratio rows, no assertions.
VerificationReport verify_table(int n_max,
                                const std::vector<std::pair<Pattern, Pattern>>& cells = {},
                                int workers = 1);

std::string report_csv(const VerificationReport& r);
std::string report_json(const VerificationReport& r, bool with_timing = false);
std::string report_markdown(const VerificationReport& r);

// Measured-threshold cache: {"cell": n0}. Reruns assert stability.
std::map<std::string, int> report_thresholds(const VerificationReport& r);
std::string thresholds_json(const std::map<std::string, int>& t);
std::map<std::string, int> parse_thresholds_json(const std::string& text);

} // namespace gturan
