// Release gate: one line per criterion, nonzero exit if any fails.
// Every expected value here comes from an independent route (enumeration
// oracle, direct formula expansion, or structural counts), never from the
// code under test.

#include "dompoly/dompoly.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace dompoly;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, const char* name, bool pass, const std::string& detail, double elapsed) {
    std::printf("[acceptance] %2d %-28s %s  (%.2fs%s%s)\n", id, name, pass ? "PASS" : "FAIL",
                elapsed, detail.empty() ? "" : ", ", detail.c_str());
    if (!pass) ++failures;
}

template <typename Fn>
void criterion(int id, const char* name, double time_limit, Fn fn) {
    auto start = Clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = seconds_since(start);
    if (pass && time_limit > 0 && elapsed >= time_limit) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over the ") +
                  std::to_string(time_limit) + "s budget";
    }
    report(id, name, pass, detail, elapsed);
}

DomPoly p4_expected() {
    // x^4 + 4x^3 + 4x^2, written out rather than computed.
    return DomPoly(std::vector<BigInt>{0, 0, 4, 4, 1});
}

} // namespace

int main() {
    // 1. The P4 regression through all three routes.
    criterion(1, "p4-three-routes", 1.0, [](std::string& detail) {
        Graph p4 = build(parse_expr("path(4)"));
        DomPoly via_enum = count_bruteforce(p4);
        DomPoly via_ie = count_inclusion_exclusion(p4);
        EvalResult corona = eval_poly(parse_expr("corona_k1(path(2))"), EvalStrategy::rewrite_only);
        bool used_corona_rule =
            corona.trace.size() == 1 && corona.trace[0].rule == "corona_pendant_formula";
        detail = "enum/ie/corona all x^4+4x^3+4x^2";
        return via_enum == p4_expected() && via_ie == p4_expected() &&
               corona.poly == p4_expected() && used_corona_rule;
    });

    // 2. Every closed form against the enumeration oracle.
    criterion(2, "closed-forms-vs-oracle", 60.0, [](std::string& detail) {
        long checked = 0;
        for (int n = 1; n <= 10; ++n) {
            if (cf_complete(n) != count_bruteforce(build(GraphExpr::leaf(GraphExpr::Kind::complete, n))))
                return false;
            if (cf_empty(n) != count_bruteforce(Graph(n))) return false;
            checked += 2;
        }
        for (int m = 1; m <= 6; ++m)
            for (int n = 1; n <= 6; ++n) {
                if (cf_complete_bipartite(m, n) !=
                    count_bruteforce(build(GraphExpr::leaf(GraphExpr::Kind::bipartite, m, n))))
                    return false;
                ++checked;
            }
        for (int n = 1; n <= 6; ++n) {
            if (cf_star(n) != count_bruteforce(build(GraphExpr::leaf(GraphExpr::Kind::star, n))))
                return false;
            ++checked;
        }
        for (int n = 4; n <= 12; ++n) {
            if (cf_wheel(n) != count_bruteforce(build(GraphExpr::leaf(GraphExpr::Kind::wheel, n))))
                return false;
            ++checked;
        }
        detail = std::to_string(checked) + " family instances";
        return true;
    });

    // 3. Component product on random disjoint unions.
    criterion(3, "union-product-theorem", 0.0, [](std::string& detail) {
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 200; ++trial) {
            // Orders 1..8 each, so the union never exceeds 16 vertices.
            int n1 = 1 + static_cast<int>(rng() % 8);
            int n2 = 1 + static_cast<int>(rng() % 8);
            double p = 0.15 + 0.1 * static_cast<double>(trial % 8);
            Graph g1 = random_gnp(n1, p, rng);
            Graph g2 = random_gnp(n2, p, rng);
            ExprPtr u = GraphExpr::node(GraphExpr::Kind::union_, GraphExpr::literal_graph(g1),
                                        GraphExpr::literal_graph(g2));
            DomPoly product = cf_product({count_bruteforce(g1), count_bruteforce(g2)});
            if (product != count_bruteforce(build(u))) {
                detail = "mismatch at trial " + std::to_string(trial);
                return false;
            }
        }
        detail = "200 random unions, total order <= 16";
        return true;
    });

    // 4. Join formula on random pairs.
    criterion(4, "join-theorem", 0.0, [](std::string& detail) {
        std::mt19937_64 rng(103);
        for (int trial = 0; trial < 200; ++trial) {
            int n1 = 1 + static_cast<int>(rng() % 8);
            int n2 = 1 + static_cast<int>(rng() % 8);
            double p = 0.15 + 0.1 * static_cast<double>(trial % 8);
            Graph g1 = random_gnp(n1, p, rng);
            Graph g2 = random_gnp(n2, p, rng);
            ExprPtr j = GraphExpr::node(GraphExpr::Kind::join, GraphExpr::literal_graph(g1),
                                        GraphExpr::literal_graph(g2));
            DomPoly formula = cf_join(count_bruteforce(g1), n1, count_bruteforce(g2), n2);
            if (formula != count_bruteforce(build(j))) {
                detail = "mismatch at trial " + std::to_string(trial);
                return false;
            }
        }
        detail = "200 random joins, n1+n2 <= 16";
        return true;
    });

    // 5. Corona with K1: structure independence and gamma = n.
    criterion(5, "corona-formula-and-gamma", 120.0, [](std::string& detail) {
        std::mt19937_64 rng(107);
        for (int trial = 0; trial < 50; ++trial) {
            int n = 1 + static_cast<int>(rng() % 9);
            double p = 0.1 + 0.08 * static_cast<double>(trial % 10);
            Graph g = random_gnp(n, p, rng);
            Graph crown = build(GraphExpr::node(GraphExpr::Kind::corona_k1,
                                                GraphExpr::literal_graph(g)));
            DomPoly enumerated = count_bruteforce(crown);
            if (enumerated != cf_corona_k1(n)) {
                detail = "polynomial mismatch at trial " + std::to_string(trial);
                return false;
            }
            if (domination_number(crown).number != n) {
                detail = "gamma mismatch at trial " + std::to_string(trial);
                return false;
            }
        }
        detail = "50 random bases, n <= 9";
        return true;
    });

    // 6. Coefficient identities, exhaustively through order 5.
    criterion(6, "coefficient-identities", 0.0, [](std::string& detail) {
        long graphs = 0, checks = 0, failed = 0;
        for (int n = 1; n <= 5; ++n)
            for_each_labeled_graph(n, [&](const Graph& g) {
                ++graphs;
                DomPoly p = count_bruteforce(g);
                CoeffStats st = coeff_stats(g);
                VerifyReport r = verify_coefficients(g, p, st);
                r.checks.push_back(verify_k2_vanishing(p, st));
                for (const CheckRecord& c : r.checks) {
                    ++checks;
                    if (c.status == CheckStatus::fail) ++failed;
                }
            });
        detail = std::to_string(graphs) + " graphs, " + std::to_string(checks) + " checks, " +
                 std::to_string(failed) + " failures";
        return graphs == 1099 && failed == 0;
    });

    // 7. Monotone lower half, exhaustive plus random.
    criterion(7, "monotonicity", 0.0, [](std::string& detail) {
        long failed = 0, checked = 0;
        for (int n = 1; n <= 5; ++n)
            for_each_labeled_graph(n, [&](const Graph& g) {
                ++checked;
                if (verify_monotone(count_bruteforce(g), n).status != CheckStatus::pass) ++failed;
            });
        std::mt19937_64 rng(109);
        const double probs[] = {0.2, 0.5, 0.8};
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 1 + static_cast<int>(rng() % 14);
            Graph g = random_gnp(n, probs[trial % 3], rng);
            ++checked;
            if (verify_monotone(count_bruteforce(g), n).status != CheckStatus::pass) ++failed;
        }
        detail = std::to_string(checked) + " graphs, " + std::to_string(failed) + " failures";
        return failed == 0;
    });

    // 8. Corona mode pattern for every order through 64.
    criterion(8, "corona-mode-structure", 1.0, [](std::string& detail) {
        for (int n = 1; n <= 64; ++n) {
            VerifyReport r = verify_corona_modes(n);
            if (!r.overall_pass()) {
                detail = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        detail = "orders 1..64, pattern + modes + endpoints";
        return true;
    });

    // 9. The two counting backends agree bit-exactly.
    criterion(9, "oracle-independence", 0.0, [](std::string& detail) {
        for (int n = 0; n <= 5; ++n) {
            bool ok = true;
            for_each_labeled_graph(n, [&](const Graph& g) {
                if (count_bruteforce(g) != count_inclusion_exclusion(g)) ok = false;
            });
            if (!ok) {
                detail = "exhaustive mismatch at n = " + std::to_string(n);
                return false;
            }
        }
        std::mt19937_64 rng(113);
        for (int trial = 0; trial < 500; ++trial) {
            int n = 6 + static_cast<int>(rng() % 11);
            double p = 0.1 + 0.08 * static_cast<double>(trial % 10);
            Graph g = random_gnp(n, p, rng);
            if (count_bruteforce(g) != count_inclusion_exclusion(g)) {
                detail = "random mismatch at trial " + std::to_string(trial);
                return false;
            }
        }
        detail = "exhaustive n <= 5 plus 500 random, 6 <= n <= 16";
        return true;
    });

    // 10. Unimodality scan: completes and reports; never asserts the conjecture.
    criterion(10, "unimodality-scan", 0.0, [](std::string& detail) {
        std::vector<Graph> corpus;
        for (int n = 1; n <= 5; ++n)
            for_each_labeled_graph(n, [&](const Graph& g) { corpus.push_back(g); });
        std::mt19937_64 rng(127);
        for (int trial = 0; trial < 10000; ++trial) {
            int n = 1 + static_cast<int>(rng() % 14);
            corpus.push_back(random_gnp(n, 0.1 + 0.08 * static_cast<double>(trial % 10), rng));
        }
        ScanReport r = scan_unimodality(corpus);
        detail = std::to_string(r.checked) + " scanned, " +
                 std::to_string(r.counterexamples.size()) + " counterexamples";
        return r.checked == static_cast<long>(corpus.size());
    });

    // 11. Thread count never changes the bytes of criterion 1's output.
    criterion(11, "thread-determinism", 0.0, [](std::string& detail) {
        Graph p4 = build(parse_expr("path(4)"));
        std::string base_enum = poly_to_json(count_bruteforce(p4, 1)).dump();
        std::string base_ie = poly_to_json(count_inclusion_exclusion(p4, 1)).dump();
        for (int threads : {4, 8}) {
            if (poly_to_json(count_bruteforce(p4, threads)).dump() != base_enum) {
                detail = "enumeration differs at " + std::to_string(threads) + " threads";
                return false;
            }
            if (poly_to_json(count_inclusion_exclusion(p4, threads)).dump() != base_ie) {
                detail = "inclusion-exclusion differs at " + std::to_string(threads) + " threads";
                return false;
            }
        }
        bool bytes_expected = base_enum == R"({"coeffs":["0","0","4","4","1"]})";
        detail = "1/4/8 threads, " + base_enum;
        return bytes_expected && base_enum == base_ie;
    });

    if (failures == 0) std::printf("acceptance: all 11 criteria PASS\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
