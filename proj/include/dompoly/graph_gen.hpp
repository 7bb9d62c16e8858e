#pragma once

#include "dompoly/graph.hpp"

#include <cstdint>
#include <functional>
#include <random>

namespace dompoly {

// All 2^C(n,2) labeled graphs on n vertices, in edge-mask order.
// Feasible for n <= 6 or so.
inline void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        fn(g);
    }
}

// G(n,p) with explicit uniform draws so the sequence is reproducible
// from the seed alone.
inline Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) g.add_edge(u, v);
        }
    return g;
}

} // namespace dompoly
