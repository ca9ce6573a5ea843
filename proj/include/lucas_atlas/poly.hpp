#pragma once

// Fibonacci polynomials F_n(x, y) = x F_{n-1} - y F_{n-2}, F_0 = 0, F_1 = 1,
// stored as F_n = sum_h a_h x^{n-2h-1} y^h, and the binary forms G_m obtained
// by substituting x^2 -> x.

#include "lucas_core.hpp"
#include "numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lucas::poly {

struct FibPolynomial {
    unsigned n = 1;
    std::vector<BigInt> coefficients;  // a_h for h = 0 .. floor((n-1)/2)

    /// Exact value at (x, y).
    BigInt evaluate(const BigInt& x, const BigInt& y) const {
        // Homogeneous Horner in (x^2, y), then the leftover x for even n.
        const BigInt x2 = x * x;
        BigInt acc = coefficients[0];
        BigInt ypow = 1;
        for (std::size_t h = 1; h < coefficients.size(); ++h) {
            ypow *= y;
            acc = acc * x2 + coefficients[h] * ypow;
        }
        return (n % 2 == 0) ? BigInt(acc * x) : acc;
    }

    BigInt abs_coefficient_sum() const {
        BigInt s = 0;
        for (const auto& a : coefficients) s += abs(a);
        return s;
    }
};

struct AssociatedForm {
    unsigned n = 5;
    unsigned m = 2;                    // degree
    std::vector<BigInt> coefficients;  // c_h of x^{m-h} y^h

    BigInt evaluate(const BigInt& x, const BigInt& y) const {
        BigInt total = 0;
        BigInt ypow = 1;
        for (unsigned h = 0; h <= m; ++h) {
            total += coefficients[h] * boost::multiprecision::pow(x, m - h) * ypow;
            ypow *= y;
        }
        return total;
    }
};

inline FibPolynomial fib_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("fib_poly: n must be >= 1");
    // a^{(k)}_h = a^{(k-1)}_h - a^{(k-2)}_{h-1}
    std::vector<BigInt> prev;      // F_0 = 0
    std::vector<BigInt> cur{1};    // F_1 = 1
    for (unsigned k = 2; k <= n; ++k) {
        std::vector<BigInt> next((k - 1) / 2 + 1, 0);
        for (std::size_t h = 0; h < next.size(); ++h) {
            if (h < cur.size()) next[h] += cur[h];
            if (h >= 1 && h - 1 < prev.size()) next[h] -= prev[h - 1];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return FibPolynomial{n, std::move(cur)};
}

/// G_m with F_n(x, y) = G_m(x^2, y) for odd n and x G_m(x^2, y) for even n.
inline AssociatedForm associated_form(unsigned n) {
    if (n < 5) throw std::invalid_argument("associated_form: n must be >= 5");
    FibPolynomial f = fib_poly(n);
    const unsigned m = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
    return AssociatedForm{n, m, std::move(f.coefficients)};
}

/// 2 cos(k pi / n), k = 1 .. n-1: the zeros of F_n(x, 1).
inline std::vector<Real> roots_of_section(unsigned n) {
    if (n < 2) throw std::invalid_argument("roots_of_section: n must be >= 2");
    const Real pi = real_pi();
    std::vector<Real> roots;
    roots.reserve(n - 1);
    for (unsigned k = 1; k < n; ++k) roots.push_back(2 * cos(pi * k / n));
    return roots;
}

/// F_n(A, B) from the factorisation prod_k (A^2 - 4B cos^2(k pi / n)), with a
/// leading factor A for even n.
inline Real factored_value(unsigned n, std::int64_t A, std::int64_t B) {
    if (n < 2) throw std::invalid_argument("factored_value: n must be >= 2");
    const Real pi = real_pi();
    const Real a2 = Real(A) * A;
    const Real four_b = Real(B) * 4;
    Real value = (n % 2 == 0) ? Real(A) : Real(1);
    const unsigned kmax = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
    for (unsigned k = 1; k <= kmax; ++k) {
        const Real c = cos(pi * k / n);
        value *= a2 - four_b * c * c;
    }
    return value;
}

/// F*_n * max(A^2, |B|)^{(n-1)/2}: the coefficient-sum majorant of |F_n(A, B)|.
/// Floating comparisons against exact values scale their tolerance by this.
inline Real evaluation_scale(unsigned n, std::int64_t A, std::int64_t B) {
    const Real a2 = Real(A) * A;
    const Real b = Real(B < 0 ? -B : B);
    const Real base = a2 > b ? a2 : b;
    const Real fib = to_real(term(LucasParams{1, -1}, n));
    if (base == 0) return fib;
    return fib * pow(sqrt(base), n - 1);
}

}  // namespace lucas::poly
