#pragma once

#include "dompoly/enumerate.hpp"
#include "dompoly/graph.hpp"

#include <cassert>

namespace dompoly {

// Structural counts the coefficient identities are phrased in.
struct CoeffStats {
    int order = 0;
    int isolated_count = 0;      // vertices of degree 0
    int degree_one_count = 0;    // vertices of degree 1
    int k2_component_count = 0;  // components that are a single edge
    int universal_count = 0;     // vertices of degree n-1
    int domination_number = 0;   // 0 only for the empty graph
};

inline CoeffStats coeff_stats(const Graph& g) {
    CoeffStats st;
    st.order = g.order();
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 0) ++st.isolated_count;
        if (d == 1) ++st.degree_one_count;
        if (d == g.order() - 1) ++st.universal_count;
    }
    for (const Component& c : components(g))
        if (c.graph.order() == 2 && c.graph.edge_count() == 1) ++st.k2_component_count;
    if (g.order() > 0) st.domination_number = domination_number(g).number;

    assert(st.isolated_count + st.degree_one_count <= st.order);
    assert(2 * st.k2_component_count <= std::max(st.degree_one_count, 0));
    assert(2 * st.k2_component_count <= st.order);
    assert(st.universal_count <= st.order);
    assert(st.order == 0 || st.domination_number >= 1);
    return st;
}

} // namespace dompoly
