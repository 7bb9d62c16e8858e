#pragma once

#include "dompoly/bigint.hpp"
#include "dompoly/closed_forms.hpp"
#include "dompoly/enumerate.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/graph_io.hpp"
#include "dompoly/poly.hpp"
#include "dompoly/stats.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace dompoly {

enum class CheckStatus { pass, fail, skipped, not_applicable };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

// One identity instance. The expected side is derived from structural
// counts and formulas only, the observed side from the polynomial under
// test only; the two never share a code path.
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string expected;
    std::string observed;
};

struct VerifyReport {
    std::string graph_id; // graph6
    std::vector<CheckRecord> checks;

    bool overall_pass() const {
        for (const CheckRecord& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }

    void append(const VerifyReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

inline nlohmann::ordered_json checks_to_json(const std::vector<CheckRecord>& checks) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckRecord& c : checks)
        arr.push_back(nlohmann::ordered_json{{"name", c.name},
                                             {"status", to_string(c.status)},
                                             {"expected", c.expected},
                                             {"observed", c.observed}});
    return arr;
}

namespace detail {

inline CheckRecord check_eq(const std::string& name, const BigInt& expected, const BigInt& observed) {
    CheckRecord r;
    r.name = name;
    r.expected = expected.str();
    r.observed = observed.str();
    r.status = expected == observed ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckRecord check_bool(const std::string& name, bool observed, const std::string& detail = "") {
    CheckRecord r;
    r.name = name;
    r.expected = "true";
    r.observed = observed ? "true" : (detail.empty() ? "false" : "false (" + detail + ")");
    r.status = observed ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

inline CheckRecord check_skipped(const std::string& name, const std::string& why,
                                 CheckStatus status = CheckStatus::skipped) {
    CheckRecord r;
    r.name = name;
    r.status = status;
    r.expected = why;
    r.observed = "-";
    return r;
}

} // namespace detail

// Coefficient identities tying d(G,n), d(G,n-1), d(G,n-2), d(G,1) and the
// support of D(G,x) to the structural counts in CoeffStats. Identities
// whose hypotheses fail are recorded as skipped, never as passes.
// `subgraph_check_limit` bounds the order at which the induced-subgraph
// degree check (which enumerates every one-vertex-deleted subgraph) runs.
inline VerifyReport verify_coefficients(const Graph& g, const DomPoly& p, const CoeffStats& st,
                                        int subgraph_check_limit = 12) {
    if (g.order() != st.order)
        throw std::invalid_argument("verify_coefficients: graph and stats orders differ");
    if (g.order() > 0 && p.degree() != g.order())
        throw std::invalid_argument("verify_coefficients: polynomial degree does not match the order");

    VerifyReport report;
    report.graph_id = encode_graph6(g);
    const int n = st.order;
    const int r = st.isolated_count;
    const int t = st.degree_one_count;
    const int s = st.k2_component_count;

    if (n == 0) {
        report.checks.push_back(detail::check_skipped("all_identities", "empty graph"));
        return report;
    }

    // Connected case: d(G,n) = 1 and d(G,n-1) = n. The n-1 statement needs
    // n >= 2 (K1 has no dominating set of size 0).
    if (is_connected(g) && n >= 2) {
        report.checks.push_back(detail::check_eq("connected_top_coefficient", 1, p[n]));
        report.checks.push_back(detail::check_eq("connected_penultimate_coefficient", n, p[n - 1]));
    } else {
        report.checks.push_back(
            detail::check_skipped("connected_top_coefficients", "hypothesis: connected with n >= 2"));
    }

    // r = n - d(G,n-1): every (n-1)-subset misses exactly one vertex and
    // dominates unless that vertex is isolated.
    report.checks.push_back(detail::check_eq("isolated_count_identity", r, BigInt(n) - p[n - 1]));

    // d(G,n-2) = C(n,2) - t + s - r(n-1) + C(r,2).
    if (n >= 2) {
        BigInt expected = binomial(n, 2) - t + s - BigInt(r) * (n - 1) + binomial(r, 2);
        report.checks.push_back(detail::check_eq("codegree_two_formula", expected, p[n - 2]));
    } else {
        report.checks.push_back(detail::check_skipped("codegree_two_formula", "hypothesis: n >= 2"));
    }

    // t = C(n,2) - d(G,n-2), valid when there are no isolated vertices and
    // -2 is not a root (no K2-component in disguise).
    if (n >= 2 && r == 0 && p.eval(-2) != 0) {
        report.checks.push_back(
            detail::check_eq("degree_one_count_identity", t, binomial(n, 2) - p[n - 2]));
    } else {
        report.checks.push_back(detail::check_skipped(
            "degree_one_count_identity", "hypothesis: n >= 2, no isolated vertices, D(G,-2) != 0"));
    }

    // d(G,1) counts exactly the universal vertices.
    report.checks.push_back(detail::check_eq("singleton_dominators", st.universal_count, p[1]));

    // Support is exactly [gamma, n]: zero below, positive through the top.
    {
        bool ok = true;
        for (int i = 0; i <= n; ++i) {
            bool inside = i >= st.domination_number;
            if (inside != (p[i] > 0)) ok = false;
        }
        CheckRecord rec = detail::check_bool("support_interval", ok);
        rec.expected = "support [" + std::to_string(st.domination_number) + "," + std::to_string(n) + "]";
        rec.observed = "support [" + std::to_string(p.min_degree()) + "," + std::to_string(p.degree()) +
                       "]" + (ok ? ", contiguous" : ", with gaps");
        report.checks.push_back(rec);
    }

    report.checks.push_back(detail::check_eq("no_constant_term", 0, p[0]));

    // Nonnegative coefficients with no constant term make D(G,x) strictly
    // increasing on [0, inf).
    {
        bool nonneg = true;
        for (const BigInt& c : p.coeffs())
            if (c < 0) nonneg = false;
        report.checks.push_back(
            detail::check_bool("strictly_increasing", nonneg && !p.is_zero() && p[0] == 0));
    }

    // deg D(H) <= deg D(G) for induced subgraphs; checked over all
    // one-vertex deletions with an independent enumeration per subgraph.
    if (n <= subgraph_check_limit) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            DomPoly sub = count_bruteforce(delete_vertex(g, v));
            if (sub.degree() > p.degree()) ok = false;
        }
        report.checks.push_back(detail::check_bool("induced_subgraph_degrees", ok));
    } else {
        report.checks.push_back(detail::check_skipped("induced_subgraph_degrees",
                                                      "order above subgraph check limit",
                                                      CheckStatus::not_applicable));
    }

    // Zero is a root with multiplicity exactly gamma.
    report.checks.push_back(
        detail::check_eq("zero_root_multiplicity", st.domination_number, p.min_degree()));

    return report;
}

// d(G,i) <= d(G,i+1) for 0 <= i < n/2. Proved for every graph, so a
// failure here means a counting bug.
inline CheckRecord verify_monotone(const DomPoly& p, int n) {
    for (int i = 0; 2 * i < n; ++i) {
        if (p[i] > p[i + 1]) {
            CheckRecord r;
            r.name = "monotone_lower_half";
            r.status = CheckStatus::fail;
            r.expected = "d(G," + std::to_string(i) + ") <= d(G," + std::to_string(i + 1) + ")";
            r.observed = p[i].str() + " > " + p[i + 1].str();
            return r;
        }
    }
    CheckRecord r;
    r.name = "monotone_lower_half";
    r.status = CheckStatus::pass;
    r.expected = "d(G,i) <= d(G,i+1) for all i < n/2";
    r.observed = "holds";
    return r;
}

// Mode structure of x^n (x+2)^n: strictly increasing from degree n, then
// strictly decreasing to degree 2n, with a unique mode at 4k for n = 3k,
// at 4k+1 for n = 3k+1, and a double mode {4k+2, 4k+3} for n = 3k+2.
// Endpoints are 2^n and 1.
inline VerifyReport verify_corona_modes(int n) {
    if (n < 1) throw std::domain_error("verify_corona_modes: n must be >= 1");
    DomPoly p = cf_corona_k1(n);
    VerifyReport report;
    report.graph_id = "corona_k1(n=" + std::to_string(n) + ")";

    const int k = n / 3;
    std::vector<int> expected_modes;
    switch (n % 3) {
        case 0: expected_modes = {4 * k}; break;
        case 1: expected_modes = {4 * k + 1}; break;
        default: expected_modes = {4 * k + 2, 4 * k + 3}; break;
    }
    const int rise_end = expected_modes.front();
    const int fall_start = expected_modes.back();

    bool pattern_ok = true;
    for (int i = n; i < rise_end; ++i)
        if (!(p[i] < p[i + 1])) pattern_ok = false;
    if (expected_modes.size() == 2 && !(p[rise_end] == p[fall_start])) pattern_ok = false;
    for (int i = fall_start; i < 2 * n; ++i)
        if (!(p[i] > p[i + 1])) pattern_ok = false;
    report.checks.push_back(detail::check_bool("corona_strict_mode_pattern", pattern_ok));

    {
        ModeReport modes = analyze_modes(p);
        std::ostringstream expected, observed;
        for (int m : expected_modes) expected << m << " ";
        for (int m : modes.modes) observed << m << " ";
        CheckRecord rec;
        rec.name = "corona_mode_location";
        rec.expected = expected.str();
        rec.observed = observed.str();
        rec.status = modes.modes == expected_modes ? CheckStatus::pass : CheckStatus::fail;
        report.checks.push_back(rec);
    }

    report.checks.push_back(detail::check_eq("corona_bottom_endpoint", pow2(n), p[n]));
    report.checks.push_back(detail::check_eq("corona_top_endpoint", 1, p[2 * n]));
    return report;
}

// A K2-component forces D(G,-2) = 0 through the component product,
// because D(K2,-2) = (1-2)^2 - 1 = 0.
inline CheckRecord verify_k2_vanishing(const DomPoly& p, const CoeffStats& st) {
    if (st.k2_component_count < 1)
        return detail::check_skipped("k2_component_vanishing", "no K2-component",
                                     CheckStatus::not_applicable);
    return detail::check_eq("k2_component_vanishing", 0, p.eval(-2));
}

// Unimodality of D(G,x) is a conjecture: the scan reports counterexamples
// instead of asserting. Any hit is appended to `log_path` as graph6.
struct ScanReport {
    long checked = 0;
    std::vector<std::string> counterexamples;
};

inline ScanReport scan_unimodality(const std::vector<Graph>& graphs, const std::string& log_path = "") {
    ScanReport report;
    for (const Graph& g : graphs) {
        ++report.checked;
        if (g.order() == 0) continue;
        DomPoly p = count_bruteforce(g);
        if (!analyze_modes(p).is_unimodal) report.counterexamples.push_back(encode_graph6(g));
    }
    if (!report.counterexamples.empty() && !log_path.empty()) {
        std::ofstream log(log_path, std::ios::app);
        for (const std::string& g6 : report.counterexamples) log << g6 << "\n";
    }
    return report;
}

} // namespace dompoly
