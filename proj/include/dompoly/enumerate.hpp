#pragma once

#include "dompoly/bigint.hpp"
#include "dompoly/config.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/poly.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace dompoly {

namespace detail {

inline void check_enumeration_cap(const Graph& g) {
    const int cap = enumeration_cap();
    if (g.order() > cap)
        throw size_limit_error(cap, "enumeration over 2^" + std::to_string(g.order()) +
                                        " subsets exceeds the cap " + std::to_string(cap) +
                                        " (raise with --max-n or DOMPOLY_MAX_N, max " +
                                        std::to_string(kMaxVertices) + ")");
}

// Closed neighborhoods of all subsets of one vertex block, indexed by the
// block-local subset mask. Two blocks make N[S] a pair of table lookups.
inline std::vector<VertexSet> neighborhood_table(const Graph& g, int first, int count) {
    std::vector<VertexSet> table(std::size_t(1) << count);
    for (std::uint64_t m = 1; m < table.size(); ++m) {
        int v = std::countr_zero(m);
        table[m] = table[m & (m - 1)] | g.closed_neighborhood(first + v);
    }
    return table;
}

inline int resolve_chunks(std::uint64_t total, int threads) {
    if (threads <= 0) threads = worker_threads();
    std::uint64_t t = std::max<std::uint64_t>(static_cast<std::uint64_t>(threads), 1);
    return static_cast<int>(std::min(t, std::max<std::uint64_t>(total, 1)));
}

// Runs fn(chunk, begin, end) over a fixed partition of [0, total) into
// `chunks` ranges. Results are merged by chunk index and all reductions
// here are exact integer sums, so the merged output is bit-identical for
// any worker count.
inline void run_subset_chunks(std::uint64_t total, int chunks,
                              const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    if (chunks <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(chunks));
    for (int c = 0; c < chunks; ++c) {
        std::uint64_t begin = total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
        std::uint64_t end = total * static_cast<std::uint64_t>(c + 1) / static_cast<std::uint64_t>(chunks);
        workers.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    }
    for (auto& w : workers) w.join();
}

} // namespace detail

// d(G,i) by sweeping all 2^n subsets in plain integer order: a subset
// counts towards coefficient |S| iff N[S] = V. Exact and deterministic;
// the empty graph yields the constant 1.
inline DomPoly count_bruteforce(const Graph& g, int threads = 0) {
    detail::check_enumeration_cap(g);
    const int n = g.order();
    const int lo_bits = n / 2;
    const auto lo_table = detail::neighborhood_table(g, 0, lo_bits);
    const auto hi_table = detail::neighborhood_table(g, lo_bits, n - lo_bits);
    const VertexSet all = g.vertices();
    const std::uint64_t lo_mask = (std::uint64_t(1) << lo_bits) - 1;
    const std::uint64_t total = std::uint64_t(1) << n;

    const int chunks = detail::resolve_chunks(total, threads);
    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(chunks));
    detail::run_subset_chunks(total, chunks, [&](int c, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t s = begin; s < end; ++s) {
            VertexSet covered = lo_table[s & lo_mask] | hi_table[s >> lo_bits];
            if (covered == all) ++counts[static_cast<std::size_t>(std::popcount(s))];
        }
        partial[static_cast<std::size_t>(c)] = std::move(counts);
    });

    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    for (int c = 0; c < chunks; ++c)
        for (int i = 0; i <= n; ++i)
            coeffs[static_cast<std::size_t>(i)] += partial[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
    return DomPoly(std::move(coeffs));
}

// Independent route: d(G,i) = sum over T of (-1)^|T| C(n - |N[T]|, i).
// One signed sweep buckets subsets by |N[T]|, then an O(n^2) binomial
// pass assembles the coefficients. Shares no counting logic with
// count_bruteforce beyond the neighborhood tables.
inline DomPoly count_inclusion_exclusion(const Graph& g, int threads = 0) {
    detail::check_enumeration_cap(g);
    const int n = g.order();
    const int lo_bits = n / 2;
    const auto lo_table = detail::neighborhood_table(g, 0, lo_bits);
    const auto hi_table = detail::neighborhood_table(g, lo_bits, n - lo_bits);
    const std::uint64_t lo_mask = (std::uint64_t(1) << lo_bits) - 1;
    const std::uint64_t total = std::uint64_t(1) << n;

    const int chunks = detail::resolve_chunks(total, threads);
    std::vector<std::vector<std::int64_t>> partial(static_cast<std::size_t>(chunks));
    detail::run_subset_chunks(total, chunks, [&](int c, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::int64_t> buckets(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t t = begin; t < end; ++t) {
            VertexSet covered = lo_table[t & lo_mask] | hi_table[t >> lo_bits];
            int sign = (std::popcount(t) & 1) ? -1 : 1;
            buckets[static_cast<std::size_t>(std::popcount(covered))] += sign;
        }
        partial[static_cast<std::size_t>(c)] = std::move(buckets);
    });

    std::vector<std::int64_t> buckets(static_cast<std::size_t>(n) + 1, 0);
    for (int c = 0; c < chunks; ++c)
        for (int m = 0; m <= n; ++m)
            buckets[static_cast<std::size_t>(m)] += partial[static_cast<std::size_t>(c)][static_cast<std::size_t>(m)];

    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        BigInt d = 0;
        for (int m = 0; m <= n; ++m)
            if (buckets[static_cast<std::size_t>(m)] != 0)
                d += BigInt(buckets[static_cast<std::size_t>(m)]) * binomial(n - m, i);
        coeffs[static_cast<std::size_t>(i)] = std::move(d);
    }
    return DomPoly(std::move(coeffs));
}

struct DominationResult {
    int number = 0;
    std::vector<int> witness; // first minimum dominating set in subset order
};

// Minimum dominating set by increasing-cardinality subset search. The
// witness is the first hit under the same integer subset order the
// counting sweep uses.
inline DominationResult domination_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::domain_error("domination_number: undefined for the empty graph");
    for (int k = 1; k <= n; ++k) {
        std::uint64_t s = (std::uint64_t(1) << k) - 1;
        const std::uint64_t limit = std::uint64_t(1) << n;
        while (s < limit) {
            if (g.dominates(static_cast<VertexSet>(s))) {
                DominationResult result;
                result.number = k;
                for (std::uint64_t m = s; m; m &= m - 1)
                    result.witness.push_back(std::countr_zero(m));
                return result;
            }
            // Gosper's hack: next subset of the same cardinality.
            std::uint64_t c = s & (0 - s);
            std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    DominationResult result; // unreachable: V itself always dominates
    result.number = n;
    return result;
}

} // namespace dompoly
