#pragma once

#include "dompoly/config.hpp"
#include "dompoly/errors.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dompoly {

// Vertex subset of a graph on at most 32 vertices, bit v = vertex v.
using VertexSet = std::uint32_t;

inline VertexSet full_set(int n) {
    return n >= 32 ? ~VertexSet(0) : (VertexSet(1) << n) - 1;
}

// Simple undirected graph on vertices 0..n-1. Neighborhoods are machine
// words, so union/intersection and domination tests are O(1).
// Immutable once built; sharing across threads is safe.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
        if (n > kMaxVertices)
            throw size_limit_error(kMaxVertices,
                                   "Graph: order " + std::to_string(n) + " exceeds the structural cap " +
                                       std::to_string(kMaxVertices));
        n_ = n;
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
        adj_[static_cast<std::size_t>(u)] |= VertexSet(1) << v;
        adj_[static_cast<std::size_t>(v)] |= VertexSet(1) << u;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[static_cast<std::size_t>(v)]);
    }

    int edge_count() const {
        int twice = 0;
        for (VertexSet m : adj_) twice += std::popcount(m);
        return twice / 2;
    }

    // N(v)
    VertexSet open_neighborhood(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // N[v] = N(v) | {v}
    VertexSet closed_neighborhood(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)] | (VertexSet(1) << v);
    }

    // N[S], union of closed neighborhoods over the set.
    VertexSet closed_neighborhood(VertexSet s) const {
        VertexSet covered = 0;
        while (s) {
            int v = std::countr_zero(s);
            covered |= closed_neighborhood(v);
            s &= s - 1;
        }
        return covered;
    }

    bool dominates(VertexSet s) const { return closed_neighborhood(s) == full_set(n_); }

    VertexSet vertices() const { return full_set(n_); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n_));
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Connected component as an induced subgraph plus the relabeling map:
// original_vertex[i] is the input-graph label of the component's vertex i.
struct Component {
    Graph graph;
    std::vector<int> original_vertex;
};

namespace detail {

inline VertexSet reach_from(const Graph& g, int seed) {
    VertexSet frontier = VertexSet(1) << seed;
    VertexSet seen = frontier;
    while (frontier) {
        VertexSet next = 0;
        VertexSet f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            next |= g.open_neighborhood(v);
            f &= f - 1;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

inline Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>& labels) {
    labels.clear();
    VertexSet s = keep;
    while (s) {
        labels.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    Graph sub(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (g.has_edge(labels[i], labels[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
}

} // namespace detail

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return detail::reach_from(g, 0) == g.vertices();
}

// Partition into connected components, vertices relabeled to 0..k-1 with
// the map recorded so witnesses can be translated back.
inline std::vector<Component> components(const Graph& g) {
    std::vector<Component> result;
    VertexSet remaining = g.vertices();
    while (remaining) {
        int seed = std::countr_zero(remaining);
        VertexSet comp = detail::reach_from(g, seed);
        Component c;
        c.graph = detail::induced_subgraph(g, comp, c.original_vertex);
        result.push_back(std::move(c));
        remaining &= ~comp;
    }
    return result;
}

// G - v, with the remaining vertices packed down.
inline Graph delete_vertex(const Graph& g, int v) {
    std::vector<int> labels;
    return detail::induced_subgraph(g, g.vertices() & ~(VertexSet(1) << v), labels);
}

} // namespace dompoly
