#include "gturan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gturan/io.hpp"

namespace gturan {

namespace {

uint64_t to_u64(copy_count_t c) {
    return static_cast<uint64_t>(c); // all table values fit comfortably
}

std::string cell_key(Pattern h, Pattern f) {
    return std::string(pattern_name(h)) + "/" + std::string(pattern_name(f));
}

std::string find_counterexample_g6(Pattern h, Pattern f, int n) {
    SearchResult r = max_copies(h, f, n);
    if (r.extremal.empty()) return "";
    return to_graph6(canonical_graph(r.extremal.front()));
}

} // namespace

VerificationReport verify_table(int n_max, const std::vector<std::pair<Pattern, Pattern>>& cells,
                                int workers) {
    if (n_max < 2 || n_max > kSearchMaxN) throw budget_error("verify budget is 2 <= n_max <= 10");
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::pair<Pattern, Pattern>> wanted = cells;
    if (wanted.empty())
        for (Pattern h : kPatterns)
            for (Pattern f : kPatterns) wanted.emplace_back(h, f);

    // shared search maxima per (f, n): one enumeration covers all ten h rows
    std::vector<std::pair<Pattern, int>> units;
    for (Pattern f : kPatterns) {
        bool used = false;
        int n_from = n_max + 1;
        for (auto [wh, wf] : wanted)
            if (wf == f) {
                used = true;
                n_from = std::min(n_from, pattern_vertices(wh));
            }
        if (!used) continue;
        for (int n = n_from; n <= n_max; ++n) units.emplace_back(f, n);
    }
    // big units first so a thread pool drains evenly
    std::stable_sort(units.begin(), units.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    std::map<std::pair<Pattern, int>, AllPatternMaxima> maxima;
    std::map<std::pair<Pattern, int>, double> unit_seconds;
    for (const auto& u : units) {
        maxima[u] = {};
        unit_seconds[u] = 0.0;
    }
    {
        std::atomic<size_t> next{0};
        auto work = [&]() {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= units.size()) break;
                const auto t0 = std::chrono::steady_clock::now();
                maxima[units[i]] = max_all_patterns(units[i].first, units[i].second, 1);
                unit_seconds[units[i]] =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
    }

    VerificationReport rep;
    rep.n_max = n_max;

    for (auto [h, f] : wanted) {
        const OracleEntry& entry = lookup(h, f);
        CellReport cell;
        cell.h = h;
        cell.f = f;
        cell.kind = entry.kind;
        cell.validity = entry.validity;
        cell.pinned_threshold = entry.validity == Validity::NLargeEnough ? entry.threshold : 0;
        if (entry.note[0] != '\0') cell.notes.push_back(entry.note);

        for (int n = pattern_vertices(h); n <= n_max; ++n) {
            const OracleValue ov = evaluate(h, f, n);
            const copy_count_t found = maxima.at({f, n}).maximum[static_cast<size_t>(h)];
            cell.seconds += unit_seconds.at({f, n});
            CellRow row;
            row.n = n;
            row.search_max = found;
            switch (entry.kind) {
            case CellKind::Zero:
            case CellKind::Exact:
                row.has_oracle_value = true;
                row.oracle_value = ov.exact;
                row.exception_applied = ov.exception_applied;
                row.agree = (found == ov.exact);
                break;
            case CellKind::Asymptotic:
            case CellKind::BoundsOnly: {
                const double lead = (entry.coeff > 0 ? entry.coeff : 1.0) *
                                    std::pow(static_cast<double>(n), entry.expo);
                row.ratio = lead > 0 ? static_cast<double>(to_u64(found)) / lead : 0.0;
                row.agree = true;
                break;
            }
            }
            cell.rows.push_back(row);
        }

        // verdicts
        if (entry.kind == CellKind::Zero || (entry.kind == CellKind::Exact &&
                                             entry.validity != Validity::NLargeEnough)) {
            for (const CellRow& row : cell.rows) {
                if (row.agree) continue;
                cell.pass = false;
                std::ostringstream msg;
                msg << cell_key(h, f) << " n=" << row.n << ": oracle "
                    << count_to_string(row.oracle_value) << " != search "
                    << count_to_string(row.search_max) << " (counterexample "
                    << find_counterexample_g6(h, f, row.n) << ")";
                rep.failures.push_back(msg.str());
            }
            for (auto [en, ev] : entry.exceptions) {
                if (en > n_max || en < pattern_vertices(h)) continue;
                std::ostringstream msg;
                msg << "exceptional value at n=" << en << ": " << count_to_string(ev)
                    << " (closed form gives " << count_to_string(entry.closed_form(en)) << ")";
                cell.notes.push_back(msg.str());
            }
        } else if (entry.kind == CellKind::Exact) {
            // NLargeEnough: record the least n0 with agreement onward
            int n0 = -1;
            for (int i = static_cast<int>(cell.rows.size()) - 1; i >= 0; --i) {
                if (!cell.rows[i].agree) break;
                n0 = cell.rows[i].n;
            }
            if (n0 >= 0) cell.measured_threshold = n0;
            for (const CellRow& row : cell.rows) {
                if (row.agree || row.n < entry.threshold) continue;
                cell.pass = false;
                std::ostringstream msg;
                msg << cell_key(h, f) << " n=" << row.n
                    << ": disagreement above the pinned threshold " << entry.threshold
                    << " (oracle " << count_to_string(row.oracle_value) << ", search "
                    << count_to_string(row.search_max) << ", counterexample "
                    << find_counterexample_g6(h, f, row.n) << ")";
                rep.failures.push_back(msg.str());
            }
            for (const CellRow& row : cell.rows)
                if (!row.agree) {
                    std::ostringstream msg;
                    msg << "below threshold at n=" << row.n << ": search "
                        << count_to_string(row.search_max) << " > oracle "
                        << count_to_string(row.oracle_value);
                    cell.notes.push_back(msg.str());
                }
            if (n_max >= 9 && cell.measured_threshold &&
                *cell.measured_threshold != entry.threshold) {
                cell.pass = false;
                std::ostringstream msg;
                msg << cell_key(h, f) << ": measured threshold " << *cell.measured_threshold
                    << " != pinned " << entry.threshold;
                rep.failures.push_back(msg.str());
            }
        }
        rep.all_pass = rep.all_pass && cell.pass;
        rep.cells.push_back(std::move(cell));
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// --- emission -----------------------------------------------------------------

std::string report_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "h,f,kind,validity,n,oracle,search,agree,exception,ratio,threshold_pinned,"
           "threshold_measured\n";
    for (const CellReport& c : r.cells) {
        if (c.kind == CellKind::Zero) continue;
        for (const CellRow& row : c.rows) {
            out << pattern_name(c.h) << ',' << pattern_name(c.f) << ',' << cell_kind_name(c.kind)
                << ',' << validity_name(c.validity) << ',' << row.n << ',';
            if (row.has_oracle_value) out << count_to_string(row.oracle_value);
            out << ',' << count_to_string(row.search_max) << ',' << (row.agree ? 1 : 0) << ','
                << (row.exception_applied ? 1 : 0) << ',';
            if (c.kind == CellKind::Asymptotic || c.kind == CellKind::BoundsOnly) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6f", row.ratio);
                out << buf;
            }
            out << ',';
            if (c.pinned_threshold > 0) out << c.pinned_threshold;
            out << ',';
            if (c.measured_threshold) out << *c.measured_threshold;
            out << '\n';
        }
    }
    return out.str();
}

std::string report_json(const VerificationReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["n_max"] = r.n_max;
    j["all_pass"] = r.all_pass;
    j["failures"] = r.failures;
    j["cells"] = nlohmann::ordered_json::array();
    for (const CellReport& c : r.cells) {
        nlohmann::ordered_json jc;
        jc["h"] = pattern_name(c.h);
        jc["f"] = pattern_name(c.f);
        jc["kind"] = cell_kind_name(c.kind);
        if (c.kind == CellKind::Exact) {
            jc["validity"] = validity_name(c.validity);
            if (c.pinned_threshold > 0) jc["threshold_pinned"] = c.pinned_threshold;
            if (c.measured_threshold) jc["threshold_measured"] = *c.measured_threshold;
        }
        jc["pass"] = c.pass;
        if (with_timing) jc["seconds"] = c.seconds;
        if (!c.notes.empty()) jc["notes"] = c.notes;
        jc["rows"] = nlohmann::ordered_json::array();
        for (const CellRow& row : c.rows) {
            nlohmann::ordered_json jr;
            jr["n"] = row.n;
            if (row.has_oracle_value) jr["oracle"] = to_u64(row.oracle_value);
            jr["search"] = to_u64(row.search_max);
            jr["agree"] = row.agree;
            if (row.exception_applied) jr["exception"] = true;
            if (c.kind == CellKind::Asymptotic || c.kind == CellKind::BoundsOnly)
                jr["ratio"] = row.ratio;
            jc["rows"].push_back(std::move(jr));
        }
        j["cells"].push_back(std::move(jc));
    }
    if (with_timing) j["timing"] = {{"seconds", r.seconds}};
    return j.dump(2) + "\n";
}

std::string report_markdown(const VerificationReport& r) {
    std::ostringstream out;
    out << "# Table verification, n <= " << r.n_max << "\n\n";
    out << "Overall: " << (r.all_pass ? "PASS" : "FAIL") << "\n\n";

    const bool full = r.cells.size() == 100;
    if (full) {
        out << "| H \\ F |";
        for (Pattern f : kPatterns) out << ' ' << pattern_name(f) << " |";
        out << "\n|---|";
        for (int i = 0; i < 10; ++i) out << "---|";
        out << '\n';
        for (Pattern h : kPatterns) {
            out << "| " << pattern_name(h) << " |";
            for (Pattern f : kPatterns) {
                const CellReport& c =
                    r.cells[static_cast<size_t>(h) * 10 + static_cast<size_t>(f)];
                switch (c.kind) {
                case CellKind::Zero: out << " 0 |"; break;
                case CellKind::Exact: {
                    out << " E";
                    if (c.validity == Validity::NLargeEnough) {
                        if (c.measured_threshold)
                            out << " n0=" << *c.measured_threshold;
                        else
                            out << " n0>" << r.n_max;
                    } else if (c.validity == Validity::KnownException) {
                        out << " exc";
                    }
                    out << (c.pass ? "" : " FAIL") << " |";
                    break;
                }
                case CellKind::Asymptotic: out << " A |"; break;
                case CellKind::BoundsOnly: out << " B |"; break;
                }
            }
            out << '\n';
        }
        out << '\n';
    }

    out << "## Cells\n\n";
    for (const CellReport& c : r.cells) {
        if (c.kind == CellKind::Zero) continue;
        out << "### " << pattern_name(c.h) << " / " << pattern_name(c.f) << " ("
            << cell_kind_name(c.kind);
        if (c.kind == CellKind::Exact) out << ", " << validity_name(c.validity);
        out << ")\n\n";
        const OracleEntry& e = lookup(c.h, c.f);
        out << "- source: " << e.citation << "\n";
        if (c.pinned_threshold > 0) out << "- pinned threshold: " << c.pinned_threshold << "\n";
        if (c.measured_threshold) out << "- measured threshold: " << *c.measured_threshold << "\n";
        for (const std::string& note : c.notes) out << "- " << note << "\n";
        out << "\n| n | oracle | search | ok |\n|---|---|---|---|\n";
        for (const CellRow& row : c.rows) {
            out << "| " << row.n << " | ";
            if (row.has_oracle_value)
                out << count_to_string(row.oracle_value);
            else {
                char buf[32];
                std::snprintf(buf, sizeof buf, "ratio %.4f", row.ratio);
                out << buf;
            }
            out << " | " << count_to_string(row.search_max) << " | "
                << (row.agree ? (row.exception_applied ? "exc" : "yes") : "below") << " |\n";
        }
        out << '\n';
    }

    if (!r.failures.empty()) {
        out << "## Failures\n\n";
        for (const std::string& f : r.failures) out << "- " << f << "\n";
    }
    return out.str();
}

std::map<std::string, int> report_thresholds(const VerificationReport& r) {
    std::map<std::string, int> t;
    for (const CellReport& c : r.cells)
        if (c.kind == CellKind::Exact && c.validity == Validity::NLargeEnough &&
            c.measured_threshold)
            t[cell_key(c.h, c.f)] = *c.measured_threshold;
    return t;
}

std::string thresholds_json(const std::map<std::string, int>& t) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["thresholds"] = t;
    return j.dump(2) + "\n";
}

std::map<std::string, int> parse_thresholds_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("version") || j["version"] != 1)
        throw std::invalid_argument("unsupported thresholds file version");
    std::map<std::string, int> t;
    for (auto& [k, v] : j["thresholds"].items()) t[k] = v;
    return t;
}

} // namespace gturan
