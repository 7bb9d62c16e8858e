#pragma once

#include "dompoly/bigint.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace dompoly {

// Dense polynomial with exact integer coefficients, index = power of x.
// Stored trimmed: no trailing zero coefficients, so the zero polynomial
// has an empty coefficient vector. For a domination polynomial of a
// graph of order n the top coefficient is 1 at degree n.
class DomPoly {
public:
    DomPoly() = default;

    explicit DomPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static DomPoly zero() { return DomPoly(); }

    static DomPoly one() { return monomial(0); }

    // coeff * x^degree
    static DomPoly monomial(int degree, BigInt coeff = 1) {
        if (coeff == 0) return DomPoly();
        std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
        c.back() = std::move(coeff);
        return DomPoly(std::move(c));
    }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Lowest index with a nonzero coefficient; -1 for the zero polynomial.
    // For a counting backend's output this equals the domination number.
    int min_degree() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    // Coefficient of x^i; zero outside the stored range.
    const BigInt& operator[](int i) const {
        static const BigInt zero_value = 0;
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_value;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    // Exact Horner evaluation.
    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend DomPoly operator+(const DomPoly& p, const DomPoly& q) {
        std::vector<BigInt> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p[static_cast<int>(i)] + q[static_cast<int>(i)];
        return DomPoly(std::move(c));
    }

    friend DomPoly operator-(const DomPoly& p, const DomPoly& q) {
        std::vector<BigInt> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = p[static_cast<int>(i)] - q[static_cast<int>(i)];
        return DomPoly(std::move(c));
    }

    // Convolution product.
    friend DomPoly operator*(const DomPoly& p, const DomPoly& q) {
        if (p.is_zero() || q.is_zero()) return DomPoly();
        std::vector<BigInt> c(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
                c[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
        return DomPoly(std::move(c));
    }

    friend bool operator==(const DomPoly& p, const DomPoly& q) {
        return p.coeffs_ == q.coeffs_;
    }

    friend bool operator!=(const DomPoly& p, const DomPoly& q) { return !(p == q); }

    // Ascending powers, e.g. "4x^2 + 4x^3 + x^4"; "0" for the zero polynomial.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!first) out << (coeffs_[i] < 0 ? " - " : " + ");
            else if (coeffs_[i] < 0) out << "-";
            BigInt a = abs(coeffs_[i]);
            if (i == 0) out << a;
            else {
                if (a != 1) out << a;
                out << "x";
                if (i > 1) out << "^" << i;
            }
            first = false;
        }
        return out.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

// (1+x)^n.
inline DomPoly binomial_power(int n) {
    if (n < 0) throw std::domain_error("binomial_power: negative exponent");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = binomial(n, i);
    return DomPoly(std::move(c));
}

// Shape of the coefficient sequence over its support [min_degree, degree].
// Unimodality is judged on that contiguous support; the zero run below
// the minimum degree is not part of the sequence.
struct ModeReport {
    bool is_unimodal = false;
    std::vector<int> modes;       // full argmax set, as degrees
    bool is_log_concave = false;  // a_i^2 >= a_{i-1} a_{i+1} on the support
    bool strict_unique_mode = false;
};

inline ModeReport analyze_modes(const DomPoly& p) {
    if (p.is_zero()) throw std::domain_error("analyze_modes: zero polynomial");
    const int lo = p.min_degree();
    const int hi = p.degree();
    ModeReport report;

    int i = lo;
    while (i < hi && p[i] <= p[i + 1]) ++i;
    int j = i;
    while (j < hi && p[j] >= p[j + 1]) ++j;
    report.is_unimodal = (j == hi);

    BigInt max_value = p[lo];
    for (int k = lo + 1; k <= hi; ++k) max_value = std::max(max_value, p[k]);
    for (int k = lo; k <= hi; ++k)
        if (p[k] == max_value) report.modes.push_back(k);

    report.is_log_concave = true;
    for (int k = lo + 1; k < hi; ++k)
        if (p[k] * p[k] < p[k - 1] * p[k + 1]) report.is_log_concave = false;

    if (report.modes.size() == 1) {
        int k = report.modes.front();
        report.strict_unique_mode = p[k - 1] < p[k] && p[k] > p[k + 1];
    }
    return report;
}

// {"coeffs": ["0","0","4","4","1"]} -- decimal strings, ascending powers.
// Exact and float-free by construction.
inline nlohmann::ordered_json poly_to_json(const DomPoly& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
    return nlohmann::ordered_json{{"coeffs", std::move(coeffs)}};
}

inline DomPoly poly_from_json(const nlohmann::json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& s : j.at("coeffs"))
        coeffs.emplace_back(s.get<std::string>());
    return DomPoly(std::move(coeffs));
}

} // namespace dompoly
