#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gturan/constructions.hpp"
#include "gturan/counting.hpp"
#include "gturan/io.hpp"
#include "gturan/oracle.hpp"
#include "gturan/search.hpp"
#include "gturan/symmetrize.hpp"
#include "gturan/verify.hpp"

using namespace gturan;

namespace {

Pattern parse_pattern_arg(const std::string& s) {
    auto p = pattern_from_name(s);
    if (!p) throw CLI::ValidationError("unknown pattern: " + s + " (expected K2..K4)");
    return *p;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<Graph> read_input_graphs(const std::string& path) {
    if (path == "-") return read_graphs(std::cin);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    return read_graphs(in);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string oracle_value_json(Pattern h, Pattern f, int n) {
    const OracleValue v = evaluate(h, f, n);
    const OracleEntry& e = lookup(h, f);
    nlohmann::ordered_json j;
    j["h"] = pattern_name(h);
    j["f"] = pattern_name(f);
    j["n"] = n;
    j["kind"] = cell_kind_name(v.kind);
    switch (v.kind) {
    case CellKind::Zero: j["value"] = 0; break;
    case CellKind::Exact:
        j["value"] = static_cast<uint64_t>(v.exact);
        j["validity"] = validity_name(e.validity);
        if (v.exception_applied) j["exception"] = true;
        if (v.threshold) j["threshold"] = *v.threshold;
        break;
    case CellKind::Asymptotic:
        j["coefficient"] = v.coeff;
        j["exponent"] = v.expo;
        break;
    case CellKind::BoundsOnly:
        j["lower"] = v.lower_bound;
        j["upper"] = v.upper_bound;
        break;
    }
    j["citation"] = e.citation;
    if (e.note[0] != '\0') j["note"] = e.note;
    return j.dump(2) + "\n";
}

std::string oracle_value_text(Pattern h, Pattern f, int n) {
    const OracleValue v = evaluate(h, f, n);
    std::ostringstream out;
    out << "ex(" << n << ", " << pattern_name(h) << ", " << pattern_name(f) << ") ";
    switch (v.kind) {
    case CellKind::Zero: out << "= 0 (forbidden pattern inside counted pattern)"; break;
    case CellKind::Exact:
        out << "= " << count_to_string(v.exact);
        if (v.exception_applied) out << " (exceptional n)";
        if (v.threshold) out << "  [holds from n0=" << *v.threshold << "]";
        break;
    case CellKind::Asymptotic:
        out << "~ " << v.coeff << " * n^" << v.expo << " (asymptotic only)";
        break;
    case CellKind::BoundsOnly:
        out << "in [" << v.lower_bound << ", " << v.upper_bound << "] (bounds only)";
        break;
    }
    out << "\n";
    return out.str();
}

std::string table_dump(const std::string& format) {
    if (format == "markdown" || format == "md") {
        std::ostringstream out;
        out << "| H \\ F |";
        for (Pattern f : kPatterns) out << ' ' << pattern_name(f) << " |";
        out << "\n|---|";
        for (int i = 0; i < 10; ++i) out << "---|";
        out << '\n';
        for (Pattern h : kPatterns) {
            out << "| " << pattern_name(h) << " |";
            for (Pattern f : kPatterns) {
                const OracleEntry& e = lookup(h, f);
                switch (e.kind) {
                case CellKind::Zero: out << " 0 |"; break;
                case CellKind::Exact: out << " E (" << e.citation << ") |"; break;
                case CellKind::Asymptotic: out << " A (" << e.citation << ") |"; break;
                case CellKind::BoundsOnly: out << " B (" << e.citation << ") |"; break;
                }
            }
            out << '\n';
        }
        return out.str();
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "h,f,kind,validity,threshold,citation\n";
        for (const OracleEntry& e : oracle_table()) {
            out << pattern_name(e.h) << ',' << pattern_name(e.f) << ',' << cell_kind_name(e.kind)
                << ',';
            if (e.kind == CellKind::Exact) out << validity_name(e.validity);
            out << ',';
            if (e.kind == CellKind::Exact && e.validity == Validity::NLargeEnough)
                out << e.threshold;
            out << ",\"" << e.citation << "\"\n";
        }
        return out.str();
    }
    // json
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const OracleEntry& e : oracle_table()) {
        nlohmann::ordered_json je;
        je["h"] = pattern_name(e.h);
        je["f"] = pattern_name(e.f);
        je["kind"] = cell_kind_name(e.kind);
        if (e.kind == CellKind::Exact) {
            je["validity"] = validity_name(e.validity);
            if (e.validity == Validity::NLargeEnough) je["threshold"] = e.threshold;
            if (!e.exceptions.empty()) {
                nlohmann::ordered_json ex = nlohmann::ordered_json::array();
                for (auto [n, v] : e.exceptions)
                    ex.push_back({{"n", n}, {"value", static_cast<uint64_t>(v)}});
                je["exceptions"] = ex;
            }
        }
        if (e.kind == CellKind::Asymptotic) {
            je["coefficient"] = e.coeff;
            je["exponent"] = e.expo;
        }
        if (e.kind == CellKind::BoundsOnly) {
            je["lower"] = e.lower_bound;
            je["upper"] = e.upper_bound;
        }
        je["citation"] = e.citation;
        if (e.note[0] != '\0') je["note"] = e.note;
        j.push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Turan numbers for graphs on at most four vertices"};
    app.require_subcommand(1);
    // --h is a pattern option throughout, so help lives on --help alone
    app.set_help_flag("--help", "print help");

    // ---- count ----
    std::string count_h, count_input = "-", count_method = "fast";
    auto* cmd_count = app.add_subcommand("count", "count copies of a pattern in input graphs");
    cmd_count->set_help_flag("--help", "print help");
    cmd_count->add_option("--h", count_h, "pattern to count (K2..K4)")->required();
    cmd_count->add_option("--input", count_input, "graph file (graph6 or edge-list lines), - for stdin");
    cmd_count->add_option("--method", count_method, "fast | embed | induced")
        ->check(CLI::IsMember({"fast", "embed", "induced"}));

    // ---- construct ----
    std::string cons_family, cons_params, cons_format = "g6", cons_out;
    bool cons_check = false;
    auto* cmd_cons = app.add_subcommand("construct", "build a named extremal family member");
    cmd_cons->set_help_flag("--help", "print help");
    cmd_cons->add_option("--family", cons_family, "family name (e.g. turan, dgraph, friendship)")
        ->required();
    cmd_cons->add_option("--params", cons_params, "comma-separated integer parameters")->required();
    cmd_cons->add_option("--format", cons_format, "g6 | edges")
        ->check(CLI::IsMember({"g6", "edges"}));
    cmd_cons->add_option("--out", cons_out, "output path (default stdout)");
    cmd_cons->add_flag("--check", cons_check, "also run the defining property check");

    // ---- formula ----
    std::string form_h, form_f, form_format = "markdown", form_out;
    int form_n = 0;
    bool form_json = false, form_dump = false;
    auto* cmd_form = app.add_subcommand("formula", "evaluate one table cell or dump the table");
    cmd_form->set_help_flag("--help", "print help");
    cmd_form->add_option("--h", form_h, "counted pattern");
    cmd_form->add_option("--f", form_f, "forbidden pattern");
    cmd_form->add_option("--n", form_n, "number of vertices");
    cmd_form->add_flag("--json", form_json, "emit JSON");
    cmd_form->add_flag("--dump", form_dump, "dump the whole table");
    cmd_form->add_option("--format", form_format, "dump format: csv | json | markdown");
    cmd_form->add_option("--out", form_out, "output path (default stdout)");

    // ---- search ----
    std::string search_h, search_f, search_emit;
    int search_n = 0, search_workers = 1;
    bool search_maximal = true;
    auto* cmd_search = app.add_subcommand("search", "exact maximum over f-free graphs");
    cmd_search->set_help_flag("--help", "print help");
    cmd_search->add_option("--h", search_h)->required();
    cmd_search->add_option("--f", search_f)->required();
    cmd_search->add_option("--n", search_n)->required();
    cmd_search->add_flag("--maximal-only,!--no-maximal-only", search_maximal,
                         "restrict to edge-maximal f-free graphs (default on)");
    cmd_search->add_option("--emit-extremal", search_emit, "write extremal graphs (graph6)");
    cmd_search->add_option("--workers", search_workers, "worker threads");

    // ---- symmetrize ----
    std::string sym_input, sym_h, sym_preserve, sym_trace;
    auto* cmd_sym = app.add_subcommand("symmetrize", "run Zykov symmetrization to completion");
    cmd_sym->set_help_flag("--help", "print help");
    cmd_sym->add_option("--input", sym_input, "graph file (graph6 or edge-list), - for stdin")
        ->required();
    cmd_sym->add_option("--h", sym_h, "pattern whose count is kept non-decreasing")->required();
    cmd_sym->add_option("--preserve", sym_preserve, "comma-separated independent set to preserve");
    cmd_sym->add_option("--trace", sym_trace, "write the step trace as JSON");

    // ---- verify ----
    int ver_n = 9, ver_workers = 1;
    std::string ver_h, ver_f, ver_format = "markdown", ver_out, ver_thresholds;
    bool ver_timing = false;
    auto* cmd_ver = app.add_subcommand("verify", "verify the whole table against search");
    cmd_ver->set_help_flag("--help", "print help");
    cmd_ver->add_option("--n", ver_n, "largest n to verify (default 9)");
    cmd_ver->add_option("--h", ver_h, "restrict to one counted pattern");
    cmd_ver->add_option("--f", ver_f, "restrict to one forbidden pattern");
    cmd_ver->add_option("--workers", ver_workers, "worker threads");
    cmd_ver->add_option("--format", ver_format, "csv | json | markdown");
    cmd_ver->add_option("--out", ver_out, "report path (default stdout)");
    cmd_ver->add_option("--thresholds", ver_thresholds,
                        "measured-threshold cache; reruns assert stability");
    cmd_ver->add_flag("--timing", ver_timing, "include timing in JSON output");

    // ---- report ----
    std::string rep_in, rep_format = "markdown", rep_out;
    auto* cmd_rep = app.add_subcommand("report", "re-emit a stored JSON report");
    cmd_rep->set_help_flag("--help", "print help");
    cmd_rep->add_option("--in", rep_in, "JSON report produced by verify")->required();
    cmd_rep->add_option("--format", rep_format, "csv | json | markdown");
    cmd_rep->add_option("--out", rep_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_count) {
            const Pattern h = parse_pattern_arg(count_h);
            for (const Graph& g : read_input_graphs(count_input)) {
                copy_count_t c;
                if (count_method == "fast")
                    c = count_copies_fast(h, g);
                else if (count_method == "embed")
                    c = count_copies(h, g);
                else
                    c = count_induced(h, g);
                std::cout << count_to_string(c) << "\n";
            }
            return 0;
        }

        if (*cmd_cons) {
            const FamilySpec spec = parse_family_spec(cons_family, parse_int_list(cons_params));
            const Graph g = build(spec);
            std::string text = (cons_format == "g6" ? to_graph6(g) : to_edge_list_text(g)) + "\n";
            write_output(cons_out, text);
            if (cons_check) {
                const bool ok = defining_property_check(spec, g);
                std::cerr << family_spec_to_string(spec) << " defining property: "
                          << (ok ? "ok" : "VIOLATED") << "\n";
                return ok ? 0 : 1;
            }
            return 0;
        }

        if (*cmd_form) {
            if (form_dump) {
                write_output(form_out, table_dump(form_json ? "json" : form_format));
                return 0;
            }
            if (form_h.empty() || form_f.empty() || form_n <= 0)
                throw CLI::ValidationError("formula needs --h, --f and --n (or --dump)");
            const Pattern h = parse_pattern_arg(form_h), f = parse_pattern_arg(form_f);
            write_output(form_out,
                         form_json ? oracle_value_json(h, f, form_n) : oracle_value_text(h, f, form_n));
            return 0;
        }

        if (*cmd_search) {
            const Pattern h = parse_pattern_arg(search_h), f = parse_pattern_arg(search_f);
            SearchOptions opts;
            opts.workers = std::max(1, search_workers);
            opts.maximal_only = search_maximal;
            const SearchResult res = max_copies(h, f, search_n, opts);
            std::cout << "ex(" << res.n << ", " << pattern_name(h) << ", " << pattern_name(f)
                      << ") = " << count_to_string(res.maximum) << "\n"
                      << "extremal graphs: " << res.extremal.size() << "\n"
                      << "classes visited: " << res.graphs_visited << "\n"
                      << "elapsed: " << res.elapsed.count() << "s\n";
            if (!search_emit.empty()) {
                std::string text;
                for (const CanonicalForm& cf : res.extremal)
                    text += to_graph6(canonical_graph(cf)) + "\n";
                write_output(search_emit, text);
            }
            return 0;
        }

        if (*cmd_sym) {
            const Pattern h = parse_pattern_arg(sym_h);
            const auto graphs = read_input_graphs(sym_input);
            if (graphs.empty()) throw CLI::ValidationError("no input graph");
            const Graph& g = graphs.front();
            SymmetrizationTrace trace;
            if (sym_preserve.empty())
                trace = run_to_multipartite(g, h);
            else
                trace = run_preserving_independent_set(g, h, parse_int_list(sym_preserve));
            std::cout << to_graph6(trace.final) << "\n";
            std::cerr << trace.steps.size() << " steps, " << pattern_name(h) << " count "
                      << count_to_string(count_copies_fast(h, g)) << " -> "
                      << count_to_string(count_copies_fast(h, trace.final)) << "\n";
            if (!sym_trace.empty()) {
                nlohmann::ordered_json j;
                j["input"] = to_graph6(g);
                j["pattern"] = pattern_name(h);
                j["steps"] = nlohmann::ordered_json::array();
                for (const SymStep& s : trace.steps)
                    j["steps"].push_back({{"u", s.u},
                                          {"v", s.v},
                                          {"direction", s.u_to_v ? "u->v" : "v->u"},
                                          {"before", static_cast<uint64_t>(s.count_before)},
                                          {"after", static_cast<uint64_t>(s.count_after)}});
                j["final"] = to_graph6(trace.final);
                if (trace.preserved) j["preserved"] = *trace.preserved;
                write_output(sym_trace, j.dump(2) + "\n");
            }
            return 0;
        }

        if (*cmd_ver) {
            std::vector<std::pair<Pattern, Pattern>> cells;
            if (!ver_h.empty() || !ver_f.empty()) {
                for (Pattern h : kPatterns)
                    for (Pattern f : kPatterns) {
                        if (!ver_h.empty() && h != parse_pattern_arg(ver_h)) continue;
                        if (!ver_f.empty() && f != parse_pattern_arg(ver_f)) continue;
                        cells.emplace_back(h, f);
                    }
            }
            const VerificationReport rep = verify_table(ver_n, cells, std::max(1, ver_workers));
            std::string text;
            if (ver_format == "csv")
                text = report_csv(rep);
            else if (ver_format == "json")
                text = report_json(rep, ver_timing);
            else
                text = report_markdown(rep);
            write_output(ver_out, text);

            if (!ver_thresholds.empty()) {
                const auto measured = report_thresholds(rep);
                std::ifstream in(ver_thresholds);
                if (in) {
                    std::stringstream ss;
                    ss << in.rdbuf();
                    const auto cached = parse_thresholds_json(ss.str());
                    if (cached != measured) {
                        std::cerr << "threshold cache mismatch: " << ver_thresholds << "\n";
                        return 2;
                    }
                } else {
                    std::ofstream out(ver_thresholds);
                    out << thresholds_json(measured);
                }
            }
            return rep.all_pass ? 0 : 2;
        }

        if (*cmd_rep) {
            std::ifstream in(rep_in);
            if (!in) throw CLI::ValidationError("cannot open " + rep_in);
            nlohmann::json j = nlohmann::json::parse(in);
            VerificationReport rep;
            rep.n_max = j["n_max"];
            rep.all_pass = j["all_pass"];
            for (const auto& s : j["failures"]) rep.failures.push_back(s);
            for (const auto& jc : j["cells"]) {
                CellReport c;
                c.h = *pattern_from_name(jc["h"].get<std::string>());
                c.f = *pattern_from_name(jc["f"].get<std::string>());
                const std::string kind = jc["kind"];
                c.kind = kind == "zero"         ? CellKind::Zero
                         : kind == "exact"      ? CellKind::Exact
                         : kind == "asymptotic" ? CellKind::Asymptotic
                                                : CellKind::BoundsOnly;
                if (jc.contains("validity")) {
                    const std::string v = jc["validity"];
                    c.validity = v == "all-n"            ? Validity::AllN
                                 : v == "n-large-enough" ? Validity::NLargeEnough
                                                         : Validity::KnownException;
                }
                if (jc.contains("threshold_pinned")) c.pinned_threshold = jc["threshold_pinned"];
                if (jc.contains("threshold_measured"))
                    c.measured_threshold = jc["threshold_measured"].get<int>();
                c.pass = jc["pass"];
                if (jc.contains("notes"))
                    for (const auto& s : jc["notes"]) c.notes.push_back(s);
                for (const auto& jr : jc["rows"]) {
                    CellRow row;
                    row.n = jr["n"];
                    if (jr.contains("oracle")) {
                        row.has_oracle_value = true;
                        row.oracle_value = jr["oracle"].get<uint64_t>();
                    }
                    row.search_max = jr["search"].get<uint64_t>();
                    row.agree = jr["agree"];
                    if (jr.contains("exception")) row.exception_applied = jr["exception"];
                    if (jr.contains("ratio")) row.ratio = jr["ratio"];
                    c.rows.push_back(row);
                }
                rep.cells.push_back(std::move(c));
            }
            std::string text;
            if (rep_format == "csv")
                text = report_csv(rep);
            else if (rep_format == "json")
                text = report_json(rep, false);
            else
                text = report_markdown(rep);
            write_output(rep_out, text);
            return 0;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
