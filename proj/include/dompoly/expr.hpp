#pragma once

#include "dompoly/closed_forms.hpp"
#include "dompoly/enumerate.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/graph_io.hpp"
#include "dompoly/path_cycle.hpp"
#include "dompoly/poly.hpp"

#include "json.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace dompoly {

// Graph constructor expression. "+" is disjoint union, "*" is join; both
// left-associative with "*" binding tighter. Literal graphs only enter
// through the API, never the grammar.
struct GraphExpr;
using ExprPtr = std::shared_ptr<const GraphExpr>;

struct GraphExpr {
    enum class Kind {
        path,       // path(n), n >= 1
        cycle,      // cycle(n), n >= 3
        complete,   // complete(n), n >= 1
        empty,      // empty(n), n >= 0
        bipartite,  // bipartite(m,n), m,n >= 1
        star,       // star(n) = K_{1,n}, n >= 1 leaves
        wheel,      // wheel(n), n >= 4 total vertices
        union_,     // e1 + e2
        join,       // e1 * e2
        corona_k1,  // corona_k1(e): one pendant per vertex
        corona,     // corona(e1, e2)
        literal,    // explicit graph
    };

    Kind kind;
    int a = 0, b = 0;
    ExprPtr left, right;
    std::optional<Graph> g;

    static ExprPtr leaf(Kind k, int a, int b = 0) {
        auto e = std::make_shared<GraphExpr>();
        e->kind = k;
        e->a = a;
        e->b = b;
        return e;
    }

    static ExprPtr node(Kind k, ExprPtr left, ExprPtr right = nullptr) {
        auto e = std::make_shared<GraphExpr>();
        e->kind = k;
        e->left = std::move(left);
        e->right = std::move(right);
        return e;
    }

    static ExprPtr literal_graph(Graph graph) {
        auto e = std::make_shared<GraphExpr>();
        e->kind = Kind::literal;
        e->g = std::move(graph);
        return e;
    }
};

// Order of the constructed graph, computable without building it.
inline long expr_order(const ExprPtr& e) {
    using K = GraphExpr::Kind;
    switch (e->kind) {
        case K::path:
        case K::cycle:
        case K::complete:
        case K::empty:
        case K::wheel: return e->a;
        case K::bipartite: return e->a + e->b;
        case K::star: return e->a + 1;
        case K::union_:
        case K::join: return expr_order(e->left) + expr_order(e->right);
        case K::corona_k1: return 2 * expr_order(e->left);
        case K::corona: return expr_order(e->left) * (1 + expr_order(e->right));
        case K::literal: return e->g->order();
    }
    return 0;
}

namespace detail {

inline int precedence(GraphExpr::Kind k) {
    if (k == GraphExpr::Kind::union_) return 1;
    if (k == GraphExpr::Kind::join) return 2;
    return 3;
}

inline void print_expr(std::ostringstream& out, const ExprPtr& e) {
    using K = GraphExpr::Kind;
    auto child = [&](const ExprPtr& c) {
        bool parens = precedence(c->kind) < precedence(e->kind) ||
                      (precedence(c->kind) == precedence(e->kind) && c != e->left);
        if (parens) out << "(";
        print_expr(out, c);
        if (parens) out << ")";
    };
    switch (e->kind) {
        case K::path: out << "path(" << e->a << ")"; break;
        case K::cycle: out << "cycle(" << e->a << ")"; break;
        case K::complete: out << "complete(" << e->a << ")"; break;
        case K::empty: out << "empty(" << e->a << ")"; break;
        case K::bipartite: out << "bipartite(" << e->a << "," << e->b << ")"; break;
        case K::star: out << "star(" << e->a << ")"; break;
        case K::wheel: out << "wheel(" << e->a << ")"; break;
        case K::union_:
            child(e->left);
            out << " + ";
            child(e->right);
            break;
        case K::join:
            child(e->left);
            out << " * ";
            child(e->right);
            break;
        case K::corona_k1:
            out << "corona_k1(";
            print_expr(out, e->left);
            out << ")";
            break;
        case K::corona:
            out << "corona(";
            print_expr(out, e->left);
            out << ", ";
            print_expr(out, e->right);
            out << ")";
            break;
        case K::literal: out << "<graph6:" << encode_graph6(*e->g) << ">"; break;
    }
}

} // namespace detail

inline std::string pretty_print(const ExprPtr& e) {
    std::ostringstream out;
    detail::print_expr(out, e);
    return out.str();
}

namespace detail {

// Recursive-descent parser for
//   expr := term { "+" term }
//   term := atom { "*" atom }
//   atom := func "(" args ")" | "(" expr ")"
class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_union();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error(parse_error::Kind::syntax, static_cast<long>(pos_),
                              at() + "unexpected trailing input");
        return e;
    }

private:
    std::string at() const { return "position " + std::to_string(pos_) + ": "; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw parse_error(parse_error::Kind::syntax, static_cast<long>(pos_),
                              at() + "expected '" + std::string(1, c) + "'");
    }

    ExprPtr parse_union() {
        ExprPtr e = parse_join();
        while (eat('+')) e = GraphExpr::node(GraphExpr::Kind::union_, e, parse_join());
        return e;
    }

    ExprPtr parse_join() {
        ExprPtr e = parse_atom();
        while (eat('*')) e = GraphExpr::node(GraphExpr::Kind::join, e, parse_atom());
        return e;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (eat('(')) {
            ExprPtr e = parse_union();
            expect(')');
            return e;
        }
        std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name.empty())
            throw parse_error(parse_error::Kind::syntax, static_cast<long>(pos_),
                              at() + "expected a constructor name or '('");
        return parse_call(name, start);
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start)
            throw parse_error(parse_error::Kind::syntax, static_cast<long>(pos_),
                              at() + "expected an integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    void check_param(bool ok, std::size_t where, const std::string& msg) {
        if (!ok)
            throw parse_error(parse_error::Kind::parameter_range, static_cast<long>(where),
                              "position " + std::to_string(where) + ": " + msg);
    }

    ExprPtr parse_call(const std::string& name, std::size_t where) {
        using K = GraphExpr::Kind;
        expect('(');
        ExprPtr result;
        if (name == "corona_k1") {
            result = GraphExpr::node(K::corona_k1, parse_union());
        } else if (name == "corona") {
            ExprPtr l = parse_union();
            expect(',');
            result = GraphExpr::node(K::corona, l, parse_union());
        } else if (name == "bipartite") {
            int m = parse_int();
            expect(',');
            int n = parse_int();
            check_param(m >= 1 && n >= 1, where, "bipartite(m,n) requires m,n >= 1");
            result = GraphExpr::leaf(K::bipartite, m, n);
        } else if (name == "path" || name == "cycle" || name == "complete" || name == "empty" ||
                   name == "star" || name == "wheel") {
            int n = parse_int();
            if (name == "path") {
                check_param(n >= 1, where, "path(n) requires n >= 1");
                result = GraphExpr::leaf(K::path, n);
            } else if (name == "cycle") {
                check_param(n >= 3, where, "cycle(n) requires n >= 3");
                result = GraphExpr::leaf(K::cycle, n);
            } else if (name == "complete") {
                check_param(n >= 1, where, "complete(n) requires n >= 1");
                result = GraphExpr::leaf(K::complete, n);
            } else if (name == "empty") {
                check_param(n >= 0, where, "empty(n) requires n >= 0");
                result = GraphExpr::leaf(K::empty, n);
            } else if (name == "star") {
                check_param(n >= 1, where, "star(n) requires n >= 1");
                result = GraphExpr::leaf(K::star, n);
            } else {
                check_param(n >= 4, where, "wheel(n) requires n >= 4");
                result = GraphExpr::leaf(K::wheel, n);
            }
        } else {
            throw parse_error(parse_error::Kind::arity, static_cast<long>(where),
                              "position " + std::to_string(where) + ": unknown constructor \"" + name +
                                  "\"");
        }
        expect(')');
        return result;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ExprPtr parse_expr(const std::string& text) { return detail::ExprParser(text).parse(); }

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->a != b->a || a->b != b->b) return false;
    if (a->g.has_value() != b->g.has_value()) return false;
    if (a->g && *a->g != *b->g) return false;
    return expr_equal(a->left, b->left) && expr_equal(a->right, b->right);
}

namespace detail {

inline Graph build_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph build_cycle(int n) {
    Graph g = build_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph build_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph build_bipartite(int m, int n) {
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

// Copies `src` onto vertices offset..offset+|src|-1 of dst.
inline void copy_into(Graph& dst, const Graph& src, int offset) {
    for (int u = 0; u < src.order(); ++u)
        for (int v = u + 1; v < src.order(); ++v)
            if (src.has_edge(u, v)) dst.add_edge(offset + u, offset + v);
}

} // namespace detail

// Constructs the expression's graph explicitly. Disjoint unions relabel
// the right operand upward; joins additionally add all cross edges;
// corona(e1,e2) joins vertex i of the first graph to all of the i-th copy
// of the second.
inline Graph build(const ExprPtr& e) {
    using K = GraphExpr::Kind;
    long order = expr_order(e);
    const int cap = enumeration_cap();
    if (order > cap)
        throw size_limit_error(cap, "expression builds a graph of order " + std::to_string(order) +
                                        ", above the cap " + std::to_string(cap));
    switch (e->kind) {
        case K::path: return detail::build_path(e->a);
        case K::cycle: return detail::build_cycle(e->a);
        case K::complete: return detail::build_complete(e->a);
        case K::empty: return Graph(e->a);
        case K::bipartite: return detail::build_bipartite(e->a, e->b);
        case K::star: return detail::build_bipartite(1, e->a);
        case K::wheel: {
            Graph g(e->a);
            detail::copy_into(g, detail::build_cycle(e->a - 1), 0);
            for (int v = 0; v + 1 < e->a; ++v) g.add_edge(v, e->a - 1);
            return g;
        }
        case K::union_:
        case K::join: {
            Graph l = build(e->left);
            Graph r = build(e->right);
            Graph g(l.order() + r.order());
            detail::copy_into(g, l, 0);
            detail::copy_into(g, r, l.order());
            if (e->kind == K::join)
                for (int u = 0; u < l.order(); ++u)
                    for (int v = 0; v < r.order(); ++v) g.add_edge(u, l.order() + v);
            return g;
        }
        case K::corona_k1: {
            Graph base = build(e->left);
            int n = base.order();
            Graph g(2 * n);
            detail::copy_into(g, base, 0);
            for (int v = 0; v < n; ++v) g.add_edge(v, n + v);
            return g;
        }
        case K::corona: {
            Graph base = build(e->left);
            Graph inner = build(e->right);
            int n1 = base.order(), n2 = inner.order();
            Graph g(n1 + n1 * n2);
            detail::copy_into(g, base, 0);
            for (int i = 0; i < n1; ++i) {
                int offset = n1 + i * n2;
                detail::copy_into(g, inner, offset);
                for (int v = 0; v < n2; ++v) g.add_edge(i, offset + v);
            }
            return g;
        }
        case K::literal: return *e->g;
    }
    throw std::logic_error("build: unhandled node");
}

enum class EvalStrategy { automatic, rewrite_only, enumerate_only };

struct TraceEntry {
    std::string rule;
    std::string node;
    long order = 0;
};

struct EvalResult {
    DomPoly poly;
    std::vector<TraceEntry> trace;
};

inline nlohmann::ordered_json trace_to_json(const std::vector<TraceEntry>& trace) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TraceEntry& t : trace)
        arr.push_back(nlohmann::ordered_json{{"rule", t.rule}, {"node", t.node}, {"order", t.order}});
    return arr;
}

namespace detail {

inline DomPoly eval_node(const ExprPtr& e, EvalStrategy strategy, std::vector<TraceEntry>& trace);

inline DomPoly eval_fallback(const ExprPtr& e, EvalStrategy strategy, std::vector<TraceEntry>& trace,
                             const std::string& reason) {
    if (strategy == EvalStrategy::rewrite_only)
        throw rewrite_error("no rewrite rule for " + pretty_print(e) + " (" + reason + ")");
    trace.push_back({"enumerate", pretty_print(e), expr_order(e)});
    return count_bruteforce(build(e));
}

inline DomPoly eval_node(const ExprPtr& e, EvalStrategy strategy, std::vector<TraceEntry>& trace) {
    using K = GraphExpr::Kind;
    auto record = [&](const char* rule) { trace.push_back({rule, pretty_print(e), expr_order(e)}); };
    switch (e->kind) {
        case K::union_: {
            record("component_product");
            DomPoly l = eval_node(e->left, strategy, trace);
            DomPoly r = eval_node(e->right, strategy, trace);
            return cf_product({l, r});
        }
        case K::join: {
            long n1 = expr_order(e->left), n2 = expr_order(e->right);
            if (n1 < 1 || n2 < 1) return eval_fallback(e, strategy, trace, "join operand of order 0");
            record("join_formula");
            DomPoly l = eval_node(e->left, strategy, trace);
            DomPoly r = eval_node(e->right, strategy, trace);
            return cf_join(l, static_cast<int>(n1), r, static_cast<int>(n2));
        }
        case K::corona_k1: {
            long n = expr_order(e->left);
            if (n < 1) return eval_fallback(e, strategy, trace, "corona base of order 0");
            // Structure-independent: the base expression is never evaluated.
            record("corona_pendant_formula");
            return cf_corona_k1(static_cast<int>(n));
        }
        case K::complete: record("complete_closed_form"); return cf_complete(e->a);
        case K::empty: record("empty_closed_form"); return cf_empty(e->a);
        case K::bipartite: record("bipartite_closed_form"); return cf_complete_bipartite(e->a, e->b);
        case K::star: record("star_closed_form"); return cf_star(e->a);
        case K::wheel: record("wheel_closed_form"); return cf_wheel(e->a);
        case K::path: record("path_dp"); return path_domination_poly(e->a);
        case K::cycle: record("cycle_dp"); return cycle_domination_poly(e->a);
        case K::corona: return eval_fallback(e, strategy, trace, "general corona has no formula");
        case K::literal: return eval_fallback(e, strategy, trace, "literal graph");
    }
    throw std::logic_error("eval_node: unhandled node");
}

} // namespace detail

// Computes the domination polynomial of the expression. The automatic
// strategy rewrites through every node with a formula or DP and only
// enumerates literal graphs and general coronas; the trace records the
// rule applied at each node, preorder.
inline EvalResult eval_poly(const ExprPtr& e, EvalStrategy strategy = EvalStrategy::automatic) {
    EvalResult result;
    if (strategy == EvalStrategy::enumerate_only) {
        result.trace.push_back({"enumerate", pretty_print(e), expr_order(e)});
        result.poly = count_bruteforce(build(e));
        return result;
    }
    result.poly = detail::eval_node(e, strategy, result.trace);
    return result;
}

} // namespace dompoly
