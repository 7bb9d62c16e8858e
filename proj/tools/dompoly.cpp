// Command-line front end: exact domination polynomials, coefficient
// identity verification, tabulation, and unimodality scanning.
//
// Exit codes: 0 success, 1 input/parse error, 2 size limit,
// 3 internal oracle disagreement (always a bug), 4 verification failure.

#include "dompoly/dompoly.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dompoly;
using nlohmann::ordered_json;

constexpr int kExitParse = 1;
constexpr int kExitSizeLimit = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitVerifyFailed = 4;

struct CommonOpts {
    std::string format = "human";
    int max_n = 0; // 0 = leave cap alone
    int threads = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"human", "json", "csv"}));
        cmd->add_option("--max-n", max_n, "Raise or lower the enumeration cap (max 32)");
        cmd->add_option("--threads", threads, "Worker threads for the counting backends");
    }

    void apply() const {
        if (max_n > 0) set_enumeration_cap(max_n);
        if (threads > 0) set_worker_threads(threads);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(parse_error::Kind::malformed, 0, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A graph file holds either one graph6 line or an edge list; an edge
// list's first content line always contains interior whitespace.
Graph parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start])))
            ++start;
        trimmed = trimmed.substr(start);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.find(' ') != std::string::npos || trimmed.find('\t') != std::string::npos)
            return parse_edge_list(text);
        return parse_graph6(trimmed);
    }
    throw parse_error(parse_error::Kind::malformed, 0, "graph file has no content lines");
}

// Inputs are expression strings unless they name an existing file.
ExprPtr resolve_input(const std::string& input) {
    if (std::filesystem::exists(input))
        return GraphExpr::literal_graph(parse_graph_file(read_file(input)));
    return parse_expr(input);
}

EvalResult compute(const ExprPtr& expr, const std::string& method) {
    if (method == "enum") return eval_poly(expr, EvalStrategy::enumerate_only);
    if (method == "rewrite") return eval_poly(expr, EvalStrategy::rewrite_only);
    if (method == "ie") {
        // The two backends are independent; a mismatch is a bug, not input error.
        Graph g = build(expr);
        EvalResult result;
        result.poly = count_inclusion_exclusion(g);
        result.trace.push_back({"inclusion_exclusion", pretty_print(expr), g.order()});
        if (result.poly != count_bruteforce(g))
            throw oracle_mismatch_error("inclusion-exclusion disagrees with enumeration on " +
                                        encode_graph6(g));
        return result;
    }
    return eval_poly(expr, EvalStrategy::automatic);
}

ordered_json poly_payload(const EvalResult& r, long order, bool with_trace) {
    ordered_json out = poly_to_json(r.poly);
    if (order > 0)
        out["gamma"] = r.poly.min_degree();
    else
        out["gamma"] = nullptr;
    if (with_trace) out["trace"] = trace_to_json(r.trace);
    return out;
}

void print_coeff_list(std::ostream& os, const DomPoly& p) {
    os << "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ", ";
        os << p.coeffs()[i];
    }
    os << "]";
}

int cmd_poly(const std::string& input, const std::string& method, const CommonOpts& opts,
             bool with_trace) {
    ExprPtr expr = resolve_input(input);
    EvalResult r = compute(expr, method);
    long order = expr_order(expr);

    if (opts.format == "json") {
        std::cout << poly_payload(r, order, with_trace).dump() << "\n";
    } else if (opts.format == "csv") {
        std::cout << "degree,count\n";
        for (int i = 0; i <= r.poly.degree(); ++i) std::cout << i << "," << r.poly[i] << "\n";
    } else {
        std::cout << "coeffs: ";
        print_coeff_list(std::cout, r.poly);
        std::cout << "\n";
        std::cout << "poly:   " << r.poly.to_string() << "\n";
        if (order > 0)
            std::cout << "gamma:  " << r.poly.min_degree() << "\n";
        else
            std::cout << "gamma:  - (order 0)\n";
        if (with_trace)
            for (const TraceEntry& t : r.trace)
                std::cout << "trace:  " << t.rule << "  " << t.node << "  (order " << t.order << ")\n";
    }
    return 0;
}

int cmd_table(const std::string& input, const CommonOpts& opts) {
    ExprPtr expr = resolve_input(input);
    EvalResult r = compute(expr, "auto");
    const DomPoly& p = r.poly;
    if (p.is_zero()) throw std::runtime_error("zero polynomial");
    ModeReport modes = analyze_modes(p);
    auto is_mode = [&](int i) {
        for (int m : modes.modes)
            if (m == i) return true;
        return false;
    };

    if (opts.format == "json") {
        ordered_json rows = ordered_json::array();
        for (int i = p.min_degree(); i <= p.degree(); ++i)
            rows.push_back(ordered_json{{"degree", i}, {"count", p[i].str()}});
        ordered_json out{{"rows", std::move(rows)}, {"modes", modes.modes}};
        std::cout << out.dump() << "\n";
    } else if (opts.format == "csv") {
        std::cout << "degree,count\n";
        for (int i = p.min_degree(); i <= p.degree(); ++i) std::cout << i << "," << p[i] << "\n";
    } else {
        std::cout << "degree  count\n";
        for (int i = p.min_degree(); i <= p.degree(); ++i)
            std::cout << i << "  " << p[i] << (is_mode(i) ? "  *" : "") << "\n";
    }
    return 0;
}

struct VerifyTally {
    long graphs = 0, passes = 0, failures = 0, skips = 0;
    std::vector<std::string> failed; // "graph6 check_name"
};

void tally_report(const VerifyReport& report, VerifyTally& tally) {
    ++tally.graphs;
    for (const CheckRecord& c : report.checks) {
        switch (c.status) {
            case CheckStatus::pass: ++tally.passes; break;
            case CheckStatus::fail:
                ++tally.failures;
                if (tally.failed.size() < 20) tally.failed.push_back(report.graph_id + " " + c.name);
                break;
            default: ++tally.skips; break;
        }
    }
}

VerifyReport verify_graph(const Graph& g) {
    DomPoly p = count_bruteforce(g);
    if (p != count_inclusion_exclusion(g))
        throw oracle_mismatch_error("inclusion-exclusion disagrees with enumeration on " +
                                    encode_graph6(g));
    CoeffStats st = coeff_stats(g);
    VerifyReport report = verify_coefficients(g, p, st);
    report.checks.push_back(verify_monotone(p, g.order()));
    report.checks.push_back(verify_k2_vanishing(p, st));
    return report;
}

int cmd_verify(const std::string& input, int exhaustive, const CommonOpts& opts) {
    if (exhaustive > 0) {
        VerifyTally tally;
        for (int n = 1; n <= exhaustive; ++n)
            for_each_labeled_graph(n, [&](const Graph& g) { tally_report(verify_graph(g), tally); });
        if (opts.format == "json") {
            ordered_json out{{"graphs", tally.graphs},
                             {"passes", tally.passes},
                             {"failures", tally.failures},
                             {"skipped", tally.skips},
                             {"failed", tally.failed}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "graphs checked: " << tally.graphs << "\n"
                      << "checks passed:  " << tally.passes << "\n"
                      << "checks failed:  " << tally.failures << "\n"
                      << "checks skipped: " << tally.skips << "\n";
            for (const std::string& f : tally.failed) std::cout << "failed: " << f << "\n";
        }
        return tally.failures == 0 ? 0 : kExitVerifyFailed;
    }

    ExprPtr expr = resolve_input(input);
    VerifyReport report = verify_graph(build(expr));
    if (opts.format == "json") {
        std::cout << checks_to_json(report.checks).dump() << "\n";
    } else {
        std::cout << "graph: " << report.graph_id << "\n";
        for (const CheckRecord& c : report.checks) {
            std::cout << c.name << ": " << to_string(c.status);
            if (c.status == CheckStatus::pass || c.status == CheckStatus::fail)
                std::cout << " (expected " << c.expected << ", observed " << c.observed << ")";
            else
                std::cout << " (" << c.expected << ")";
            std::cout << "\n";
        }
        std::cout << "overall: " << (report.overall_pass() ? "pass" : "FAIL") << "\n";
    }
    return report.overall_pass() ? 0 : kExitVerifyFailed;
}

// Corpus argument: a file of graph6 lines, or a generator spec
// "all:N" / "gnp:COUNT:N:P[:SEED]".
std::vector<Graph> load_corpus(const std::string& corpus) {
    std::vector<Graph> graphs;
    if (std::filesystem::exists(corpus)) {
        std::istringstream in(read_file(corpus));
        std::string line;
        long line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            try {
                graphs.push_back(parse_graph6(line));
            } catch (const parse_error& e) {
                throw parse_error(e.kind(), line_no,
                                  "line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        return graphs;
    }
    if (corpus.rfind("all:", 0) == 0) {
        int n = std::stoi(corpus.substr(4));
        for (int k = 1; k <= n; ++k)
            for_each_labeled_graph(k, [&](const Graph& g) { graphs.push_back(g); });
        return graphs;
    }
    if (corpus.rfind("gnp:", 0) == 0) {
        std::istringstream in(corpus.substr(4));
        std::string count_s, n_s, p_s, seed_s;
        if (!std::getline(in, count_s, ':') || !std::getline(in, n_s, ':') ||
            !std::getline(in, p_s, ':'))
            throw parse_error(parse_error::Kind::malformed, 0,
                              "generator spec must be gnp:COUNT:N:P[:SEED]");
        std::uint64_t seed = 1;
        if (std::getline(in, seed_s, ':')) seed = std::stoull(seed_s);
        std::mt19937_64 rng(seed);
        long count = std::stol(count_s);
        int n = std::stoi(n_s);
        double p = std::stod(p_s);
        for (long i = 0; i < count; ++i) graphs.push_back(random_gnp(n, p, rng));
        return graphs;
    }
    throw parse_error(parse_error::Kind::malformed, 0,
                      "corpus is neither a file nor an all:/gnp: generator spec: " + corpus);
}

int cmd_scan(const std::string& corpus, const std::string& log_path, const CommonOpts& opts) {
    std::vector<Graph> graphs = load_corpus(corpus);
    ScanReport report = scan_unimodality(graphs, log_path);
    if (opts.format == "json") {
        ordered_json out{{"checked", report.checked},
                         {"counterexamples", report.counterexamples.size()},
                         {"log", report.counterexamples.empty() ? "" : log_path}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << report.checked << " checked, " << report.counterexamples.size()
                  << " counterexamples\n";
        if (!report.counterexamples.empty())
            std::cout << "counterexamples appended to " << log_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact domination polynomials of small simple graphs"};
    app.require_subcommand(1);

    std::string poly_input, poly_method = "auto";
    bool poly_trace = false;
    CommonOpts poly_opts;
    CLI::App* poly = app.add_subcommand("poly", "Compute D(G,x) for an expression or graph file");
    poly->add_option("input", poly_input, "Graph expression or file path")->required();
    poly->add_option("--method", poly_method, "Computation route")
        ->check(CLI::IsMember({"auto", "enum", "ie", "rewrite"}));
    poly->add_flag("--trace", poly_trace, "Show the rewrite derivation");
    poly_opts.add_to(poly);

    std::string verify_input;
    int verify_exhaustive = 0;
    CommonOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "Check the coefficient identities");
    verify->add_option("input", verify_input, "Graph expression or file path");
    verify->add_option("--exhaustive", verify_exhaustive,
                       "Sweep all labeled graphs up to this order instead");
    verify_opts.add_to(verify);

    std::string table_input;
    CommonOpts table_opts;
    CLI::App* table = app.add_subcommand("table", "Tabulate d(G,i) over the support");
    table->add_option("input", table_input, "Graph expression or file path")->required();
    table_opts.add_to(table);

    std::string scan_corpus, scan_log = "counterexamples.g6";
    CommonOpts scan_opts;
    CLI::App* scan = app.add_subcommand("scan", "Unimodality scan over a graph corpus");
    scan->add_option("corpus", scan_corpus, "graph6 file, or all:N / gnp:COUNT:N:P[:SEED]")
        ->required();
    scan->add_option("--log", scan_log, "Counterexample log file");
    scan_opts.add_to(scan);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(poly)) {
            poly_opts.apply();
            return cmd_poly(poly_input, poly_method, poly_opts, poly_trace);
        }
        if (app.got_subcommand(verify)) {
            verify_opts.apply();
            if (verify_input.empty() && verify_exhaustive <= 0)
                throw parse_error(parse_error::Kind::malformed, 0,
                                  "verify needs an input or --exhaustive N");
            return cmd_verify(verify_input, verify_exhaustive, verify_opts);
        }
        if (app.got_subcommand(table)) {
            table_opts.apply();
            return cmd_table(table_input, table_opts);
        }
        if (app.got_subcommand(scan)) {
            scan_opts.apply();
            return cmd_scan(scan_corpus, scan_log, scan_opts);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const size_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const oracle_mismatch_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitOracleMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
