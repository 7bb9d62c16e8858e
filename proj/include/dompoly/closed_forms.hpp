#pragma once

#include "dompoly/bigint.hpp"
#include "dompoly/path_cycle.hpp"
#include "dompoly/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dompoly {

// D(K_n, x) = (1+x)^n - 1.
inline DomPoly cf_complete(int n) {
    if (n < 1) throw std::domain_error("cf_complete: order must be >= 1");
    return binomial_power(n) - DomPoly::one();
}

// D of the edgeless graph on n vertices: x^n. n = 0 gives the constant 1,
// the multiplicative identity for the component product.
inline DomPoly cf_empty(int n) {
    if (n < 0) throw std::domain_error("cf_empty: negative order");
    return DomPoly::monomial(n);
}

// Join formula: D(G1 v G2) = ((1+x)^n1 - 1)((1+x)^n2 - 1) + D(G1) + D(G2).
// p1, p2 are the operands' domination polynomials.
inline DomPoly cf_join(const DomPoly& p1, int n1, const DomPoly& p2, int n2) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("cf_join: operand orders must be >= 1");
    if (p1.degree() > n1 || p2.degree() > n2)
        throw std::invalid_argument("cf_join: polynomial degree exceeds the stated order");
    DomPoly a = binomial_power(n1) - DomPoly::one();
    DomPoly b = binomial_power(n2) - DomPoly::one();
    return a * b + p1 + p2;
}

// D(G o K1, x) = x^n (x+2)^n, independent of the structure of G:
// the coefficient of x^(n+j) is C(n,j) 2^(n-j).
inline DomPoly cf_corona_k1(int n) {
    if (n < 1) throw std::domain_error("cf_corona_k1: order must be >= 1");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * n) + 1);
    for (int j = 0; j <= n; ++j)
        coeffs[static_cast<std::size_t>(n + j)] = binomial(n, j) * pow2(n - j);
    return DomPoly(std::move(coeffs));
}

// Component product: D of a disjoint union is the product over components.
// Empty input gives the constant 1.
inline DomPoly cf_product(const std::vector<DomPoly>& factors) {
    DomPoly result = DomPoly::one();
    for (const DomPoly& p : factors) result = result * p;
    return result;
}

// D(K_{m,n}, x) = ((1+x)^m - 1)((1+x)^n - 1) + x^m + x^n.
inline DomPoly cf_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::domain_error("cf_complete_bipartite: part sizes must be >= 1");
    return cf_join(cf_empty(m), m, cf_empty(n), n);
}

// Star with n leaves, K_{1,n} on n+1 vertices: x^n + x(1+x)^n.
inline DomPoly cf_star(int n) {
    if (n < 1) throw std::domain_error("cf_star: leaf count must be >= 1");
    return cf_join(cf_empty(1), 1, cf_empty(n), n);
}

// Wheel on n vertices, hub joined to C_{n-1}. For n >= 4:
// D(W_n, x) = x(1+x)^(n-1) + D(C_{n-1}, x). W_3 degenerates to K_3.
inline DomPoly cf_wheel(int n) {
    if (n < 3) throw std::domain_error("cf_wheel: order must be >= 3");
    if (n == 3) return cf_complete(3);
    return cf_join(cycle_domination_poly(n - 1), n - 1, cf_empty(1), 1);
}

} // namespace dompoly
