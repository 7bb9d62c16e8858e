#pragma once

#include "dompoly/config.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/poly.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace dompoly {

namespace detail {

// Vertex-by-vertex DP over a path. State of the last placed vertex:
//   0: in the set
//   1: not in the set, dominated by its predecessor
//   2: not in the set, not yet dominated (must be rescued by a successor)
// Each state carries a polynomial counting prefixes by chosen-set size.
using DpStates = std::array<DomPoly, 3>;

inline DpStates dp_step(const DpStates& s) {
    static const DomPoly x = DomPoly::monomial(1);
    DpStates next;
    next[0] = (s[0] + s[1] + s[2]) * x; // entering the set also rescues state 2
    next[1] = s[0];
    next[2] = s[1];
    return next;
}

inline void check_dp_cap(long n) {
    const int cap = dp_cap();
    if (n > cap)
        throw size_limit_error(cap, "path/cycle order " + std::to_string(n) +
                                        " exceeds the DP cap " + std::to_string(cap));
}

} // namespace detail

// D(P_n, x) for n >= 1, linear in n (no subset enumeration).
inline DomPoly path_domination_poly(long n) {
    if (n < 1) throw std::domain_error("path_domination_poly: order must be >= 1");
    detail::check_dp_cap(n);
    static const DomPoly x = DomPoly::monomial(1);
    detail::DpStates s{x, DomPoly::zero(), DomPoly::one()};
    for (long i = 1; i < n; ++i) s = detail::dp_step(s);
    return s[0] + s[1]; // a final vertex left in state 2 has no rescuer
}

// D(C_n, x) for n >= 3. The path DP is closed by splitting on how the
// first vertex is dominated:
//   A: v1 in the set (the last vertex may end undominated, v1 rescues it),
//   B: v1 out, rescued by v2 (v2 forced into the set),
//   C: v1 out, v2 out, rescued by the last vertex (forced into the set).
inline DomPoly cycle_domination_poly(long n) {
    if (n < 3) throw std::domain_error("cycle_domination_poly: order must be >= 3");
    detail::check_dp_cap(n);
    static const DomPoly x = DomPoly::monomial(1);

    detail::DpStates a{x, DomPoly::zero(), DomPoly::zero()};
    for (long i = 1; i < n; ++i) a = detail::dp_step(a);
    DomPoly case_a = a[0] + a[1] + a[2];

    detail::DpStates b{x, DomPoly::zero(), DomPoly::zero()}; // v1 out, v2 in
    for (long i = 2; i < n; ++i) b = detail::dp_step(b);
    DomPoly case_b = b[0] + b[1];

    detail::DpStates c{DomPoly::zero(), DomPoly::zero(), DomPoly::one()}; // v1 out, v2 out
    for (long i = 3; i < n; ++i) c = detail::dp_step(c);
    DomPoly case_c = (c[0] + c[1] + c[2]) * x; // forced final vertex

    return case_a + case_b + case_c;
}

} // namespace dompoly
