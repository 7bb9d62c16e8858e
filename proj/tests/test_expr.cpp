#include "dompoly/enumerate.hpp"
#include "dompoly/expr.hpp"
#include "dompoly/graph_gen.hpp"
#include "dompoly/graph_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace dompoly;

TEST_CASE("expression parsing") {
    SECTION("constructors and arities") {
        CHECK(parse_expr("path(4)")->kind == GraphExpr::Kind::path);
        CHECK(parse_expr("path(4)")->a == 4);
        ExprPtr b = parse_expr("bipartite(2,3)");
        CHECK(b->a == 2);
        CHECK(b->b == 3);
        CHECK(parse_expr("star(5)")->kind == GraphExpr::Kind::star);
        CHECK(parse_expr("corona_k1(path(2))")->kind == GraphExpr::Kind::corona_k1);
        CHECK(parse_expr("corona(cycle(3), complete(1))")->kind == GraphExpr::Kind::corona);
    }
    SECTION("whitespace is free") {
        CHECK(expr_equal(parse_expr("  path( 4 ) +  cycle(3)  "), parse_expr("path(4)+cycle(3)")));
    }
    SECTION("precedence and associativity") {
        // * binds tighter than +; both left-associative.
        ExprPtr e = parse_expr("path(2) + complete(3) * empty(1)");
        REQUIRE(e->kind == GraphExpr::Kind::union_);
        CHECK(e->left->kind == GraphExpr::Kind::path);
        CHECK(e->right->kind == GraphExpr::Kind::join);

        ExprPtr f = parse_expr("(path(2) + complete(3)) * empty(1)");
        REQUIRE(f->kind == GraphExpr::Kind::join);
        CHECK(f->left->kind == GraphExpr::Kind::union_);

        ExprPtr g = parse_expr("path(1) + path(2) + path(3)");
        REQUIRE(g->kind == GraphExpr::Kind::union_);
        CHECK(g->left->kind == GraphExpr::Kind::union_);
        CHECK(g->right->kind == GraphExpr::Kind::path);
    }
    SECTION("errors carry kind and position") {
        try {
            parse_expr("path(4");
            FAIL("no throw");
        } catch (const parse_error& e) {
            CHECK(e.kind() == parse_error::Kind::syntax);
        }
        try {
            parse_expr("frob(3)");
            FAIL("no throw");
        } catch (const parse_error& e) {
            CHECK(e.kind() == parse_error::Kind::arity);
            CHECK(e.where() == 0);
        }
        try {
            parse_expr("path(2) + cycle(2)");
            FAIL("no throw");
        } catch (const parse_error& e) {
            CHECK(e.kind() == parse_error::Kind::parameter_range);
            CHECK(e.where() == 10);
        }
        CHECK_THROWS_AS(parse_expr(""), parse_error);
        CHECK_THROWS_AS(parse_expr("path(2) path(3)"), parse_error);
        CHECK_THROWS_AS(parse_expr("wheel(3)"), parse_error);  // grammar demands n >= 4
        CHECK_THROWS_AS(parse_expr("bipartite(0,2)"), parse_error);
        CHECK_THROWS_AS(parse_expr("path(-1)"), parse_error);
        CHECK_NOTHROW(parse_expr("empty(0)"));
    }
}

TEST_CASE("expression order") {
    CHECK(expr_order(parse_expr("path(4)")) == 4);
    CHECK(expr_order(parse_expr("star(5)")) == 6);
    CHECK(expr_order(parse_expr("bipartite(2,3)")) == 5);
    CHECK(expr_order(parse_expr("path(3) + cycle(4)")) == 7);
    CHECK(expr_order(parse_expr("path(3) * cycle(4)")) == 7);
    CHECK(expr_order(parse_expr("corona_k1(path(5))")) == 10);
    CHECK(expr_order(parse_expr("corona(path(3), complete(2))")) == 9);
    CHECK(expr_order(parse_expr("empty(0)")) == 0);
}

TEST_CASE("pretty print round trips") {
    for (const char* text : {
             "path(4)",
             "cycle(3) + complete(2)",
             "path(2) + complete(3) * empty(1)",
             "(path(2) + complete(3)) * empty(1)",
             "bipartite(2,3)",
             "corona_k1(path(2) + path(3))",
             "corona(cycle(4), complete(2))",
             "wheel(6) * star(2)",
             "path(1) + path(2) + path(3)",
             "path(1) * (path(2) + path(3)) * path(4)",
         }) {
        ExprPtr e = parse_expr(text);
        ExprPtr back = parse_expr(pretty_print(e));
        INFO(text << "  ->  " << pretty_print(e));
        REQUIRE(expr_equal(e, back));
    }
}

TEST_CASE("building graphs from expressions") {
    SECTION("families have the right shape") {
        Graph p = build(parse_expr("path(5)"));
        CHECK(p.edge_count() == 4);
        CHECK(is_connected(p));
        Graph c = build(parse_expr("cycle(5)"));
        CHECK(c.edge_count() == 5);
        for (int v = 0; v < 5; ++v) REQUIRE(c.degree(v) == 2);
        Graph k = build(parse_expr("complete(5)"));
        CHECK(k.edge_count() == 10);
        Graph w = build(parse_expr("wheel(6)"));
        CHECK(w.edge_count() == 10);
        CHECK(w.degree(5) == 5); // hub is the last vertex
        Graph s = build(parse_expr("star(4)"));
        CHECK(s.order() == 5);
        CHECK(s.degree(0) == 4);
    }
    SECTION("union and join relabel the right operand") {
        Graph u = build(parse_expr("complete(2) + complete(3)"));
        CHECK(u.order() == 5);
        CHECK(u.edge_count() == 4);
        CHECK(u.has_edge(0, 1));
        CHECK(u.has_edge(2, 3));
        CHECK(!u.has_edge(1, 2));

        Graph j = build(parse_expr("complete(2) * complete(3)"));
        CHECK(j.edge_count() == 4 + 6);
        CHECK(j == build(parse_expr("complete(5)")));
    }
    SECTION("corona attaches one copy per base vertex") {
        Graph g = build(parse_expr("corona(path(3), complete(2))"));
        CHECK(g.order() == 9);
        // Base edges + 3 copies of K2 + 3 * 2 cross edges.
        CHECK(g.edge_count() == 2 + 3 + 6);
        CHECK(g.has_edge(0, 3));
        CHECK(g.has_edge(0, 4));
        CHECK(g.has_edge(3, 4));
        CHECK(!g.has_edge(0, 5));

        Graph h = build(parse_expr("corona_k1(path(3))"));
        CHECK(h == build(parse_expr("corona(path(3), empty(1))")));
    }
    SECTION("cap applies to the built order") {
        int saved = enumeration_cap();
        set_enumeration_cap(8);
        CHECK_THROWS_AS(build(parse_expr("complete(9)")), size_limit_error);
        CHECK_THROWS_AS(build(parse_expr("corona_k1(path(5))")), size_limit_error);
        CHECK_NOTHROW(build(parse_expr("complete(8)")));
        set_enumeration_cap(saved);
    }
}

TEST_CASE("evaluation strategies agree") {
    const char* exprs[] = {
        "path(7)",
        "cycle(6)",
        "complete(5)",
        "empty(4)",
        "bipartite(3,4)",
        "star(5)",
        "wheel(7)",
        "path(3) + cycle(4)",
        "path(3) * cycle(4)",
        "corona_k1(cycle(4))",
        "complete(2) + complete(2) + empty(1)",
        "(path(2) + path(3)) * complete(2)",
    };
    for (const char* text : exprs) {
        ExprPtr e = parse_expr(text);
        INFO(text);
        DomPoly via_rules = eval_poly(e, EvalStrategy::rewrite_only).poly;
        DomPoly via_enum = eval_poly(e, EvalStrategy::enumerate_only).poly;
        REQUIRE(via_rules == via_enum);
        REQUIRE(eval_poly(e, EvalStrategy::automatic).poly == via_enum);
    }
}

TEST_CASE("rewrite-only strategy") {
    SECTION("pure families never enumerate") {
        EvalResult r = eval_poly(parse_expr("corona_k1(path(3) * complete(2))"),
                                 EvalStrategy::rewrite_only);
        REQUIRE(r.trace.size() == 1);
        CHECK(r.trace[0].rule == "corona_pendant_formula");
        CHECK(r.trace[0].order == 10);
        CHECK(r.poly == cf_corona_k1(5));
    }
    SECTION("literal graphs have no rewrite") {
        ExprPtr lit = GraphExpr::literal_graph(parse_graph6("C~"));
        CHECK_THROWS_AS(eval_poly(lit, EvalStrategy::rewrite_only), rewrite_error);
        CHECK(eval_poly(lit, EvalStrategy::automatic).poly == cf_complete(4));
    }
    SECTION("general corona falls back to enumeration") {
        ExprPtr e = parse_expr("corona(path(2), complete(2))");
        CHECK_THROWS_AS(eval_poly(e, EvalStrategy::rewrite_only), rewrite_error);
        EvalResult r = eval_poly(e, EvalStrategy::automatic);
        REQUIRE(r.trace.size() == 1);
        CHECK(r.trace[0].rule == "enumerate");
        CHECK(r.poly == count_bruteforce(build(e)));
    }
}

TEST_CASE("trace records the derivation preorder") {
    EvalResult r = eval_poly(parse_expr("path(2) + complete(3) * empty(1)"));
    REQUIRE(r.trace.size() == 5);
    CHECK(r.trace[0].rule == "component_product");
    CHECK(r.trace[0].order == 6);
    CHECK(r.trace[1].rule == "path_dp");
    CHECK(r.trace[2].rule == "join_formula");
    CHECK(r.trace[3].rule == "complete_closed_form");
    CHECK(r.trace[4].rule == "empty_closed_form");
    CHECK(r.trace[2].node == "complete(3) * empty(1)");

    nlohmann::ordered_json j = trace_to_json(r.trace);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 5);
    CHECK(j[0]["rule"] == "component_product");
    CHECK(j[0]["node"] == "path(2) + complete(3) * empty(1)");
    CHECK(j[0]["order"] == 6);
}

TEST_CASE("corona formula is structure independent") {
    // Same order, different bases: identical polynomial, and the rewrite
    // route never looks at the base.
    ExprPtr a = parse_expr("corona_k1(path(4))");
    ExprPtr b = parse_expr("corona_k1(complete(4))");
    ExprPtr c = parse_expr("corona_k1(empty(4))");
    DomPoly via_formula = eval_poly(a, EvalStrategy::rewrite_only).poly;
    CHECK(via_formula == eval_poly(b, EvalStrategy::rewrite_only).poly);
    CHECK(via_formula == eval_poly(c, EvalStrategy::rewrite_only).poly);
    // Independent confirmation by full enumeration of each graph.
    CHECK(via_formula == eval_poly(a, EvalStrategy::enumerate_only).poly);
    CHECK(via_formula == eval_poly(b, EvalStrategy::enumerate_only).poly);
    CHECK(via_formula == eval_poly(c, EvalStrategy::enumerate_only).poly);

    // Random bases of equal order, compared through explicit construction.
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        ExprPtr g = GraphExpr::node(GraphExpr::Kind::corona_k1,
                                    GraphExpr::literal_graph(random_gnp(n, 0.4, rng)));
        ExprPtr h = GraphExpr::node(GraphExpr::Kind::corona_k1,
                                    GraphExpr::literal_graph(random_gnp(n, 0.6, rng)));
        REQUIRE(eval_poly(g, EvalStrategy::enumerate_only).poly ==
                eval_poly(h, EvalStrategy::enumerate_only).poly);
        REQUIRE(eval_poly(g).poly == cf_corona_k1(n));
    }
}

TEST_CASE("join with an order-zero operand falls back") {
    ExprPtr e = parse_expr("path(2) * empty(0)");
    // Join with nothing is just the left operand's graph.
    DomPoly p = eval_poly(e).poly;
    CHECK(p == path_domination_poly(2));
    CHECK_THROWS_AS(eval_poly(e, EvalStrategy::rewrite_only), rewrite_error);
}
