#pragma once

// Lucas sequences U_0 = 0, U_1 = 1, U_n = A U_{n-1} - B U_{n-2}: exact terms,
// root magnitudes and degeneracy classification.

#include "numeric.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace lucas {

struct LucasParams {
    std::int64_t A = 0;
    std::int64_t B = 0;

    friend bool operator==(const LucasParams&, const LucasParams&) = default;
    friend auto operator<=>(const LucasParams&, const LucasParams&) = default;
};

enum class SequenceKind { Degenerate, RealCase, NonRealCase, Invalid };

inline std::string_view to_string(SequenceKind k) {
    switch (k) {
        case SequenceKind::Degenerate: return "degenerate";
        case SequenceKind::RealCase: return "real";
        case SequenceKind::NonRealCase: return "non-real";
        case SequenceKind::Invalid: return "invalid";
    }
    return "?";
}

struct SequenceClass {
    SequenceKind kind = SequenceKind::Invalid;
    BigInt discriminant;      // A^2 - 4B
    Real dominant_root_abs;   // |alpha|, with |alpha| >= |beta|
};

inline i128 discriminant(LucasParams p) {
    return static_cast<i128>(p.A) * p.A - 4 * static_cast<i128>(p.B);
}

/// A B (A^2 - 4B) != 0.
inline constexpr bool is_valid(LucasParams p) {
    return p.A != 0 && p.B != 0 &&
           static_cast<i128>(p.A) * p.A != 4 * static_cast<i128>(p.B);
}

/// Membership in the families (r, r^2), (2r, 2r^2), (3r, 3r^2), r != 0.
/// Writing A = cr gives B = A^2, A^2/2 or A^2/3 respectively.
inline constexpr bool in_degenerate_family(LucasParams p) {
    if (p.A == 0) return false;
    const i128 a2 = static_cast<i128>(p.A) * p.A;
    const i128 b = p.B;
    return b == a2 || 2 * b == a2 || 3 * b == a2;
}

inline constexpr bool is_nondegenerate(LucasParams p) {
    return is_valid(p) && !in_degenerate_family(p);
}

/// Kind only; no real arithmetic. Used by the hot enumeration loops.
inline constexpr SequenceKind classify_kind(LucasParams p) {
    if (!is_valid(p)) return SequenceKind::Invalid;
    if (in_degenerate_family(p)) return SequenceKind::Degenerate;
    const i128 d = static_cast<i128>(p.A) * p.A - 4 * static_cast<i128>(p.B);
    return d > 0 ? SequenceKind::RealCase : SequenceKind::NonRealCase;
}

/// |alpha| = (|A| + sqrt(A^2 - 4B)) / 2 for real roots, sqrt(B) otherwise.
inline Real dominant_root_abs(LucasParams p) {
    const i128 d = discriminant(p);
    if (d >= 0) {
        return (Real(p.A < 0 ? -p.A : p.A) + sqrt(to_real(to_big(d)))) / 2;
    }
    return sqrt(Real(p.B));
}

inline SequenceClass classify(LucasParams p) {
    return SequenceClass{classify_kind(p), to_big(discriminant(p)), dominant_root_abs(p)};
}

namespace detail {

inline BigInt term_iterative(LucasParams p, std::uint64_t n) {
    if (n == 0) return 0;
    BigInt prev = 0;
    BigInt cur = 1;
    for (std::uint64_t k = 1; k < n; ++k) {
        BigInt next = p.A * cur - p.B * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Companion-sequence ladder on (U_k, V_k, B^k), V_k = alpha^k + beta^k:
//   U_2k = U_k V_k,  V_2k = V_k^2 - 2 B^k,
//   2 U_{k+1} = A U_k + V_k,  2 V_{k+1} = D U_k + A V_k.
inline BigInt term_doubling(LucasParams p, std::uint64_t n) {
    const BigInt A = p.A;
    const BigInt D = to_big(discriminant(p));
    BigInt U = 0;
    BigInt V = 2;
    BigInt Q = 1;
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        BigInt U2 = U * V;
        BigInt V2 = V * V - 2 * Q;
        Q *= Q;
        U = std::move(U2);
        V = std::move(V2);
        if ((n >> bit) & 1U) {
            BigInt U1 = (A * U + V) / 2;
            BigInt V1 = (D * U + A * V) / 2;
            U = std::move(U1);
            V = std::move(V1);
            Q *= p.B;
        }
    }
    return U;
}

}  // namespace detail

inline constexpr std::uint64_t kLadderThreshold = 64;

/// U_n, exact.
inline BigInt term(LucasParams p, std::uint64_t n) {
    return n <= kLadderThreshold ? detail::term_iterative(p, n) : detail::term_doubling(p, n);
}

/// U_n read off alpha^n = U_n alpha - B U_{n-1} in Z[x]/(x^2 - A x + B),
/// computed by square-and-multiply.
inline BigInt term_via_ring(LucasParams p, std::uint64_t n) {
    // Element c1 * x + c0.
    struct Elem {
        BigInt c1, c0;
    };
    const BigInt A = p.A;
    const BigInt B = p.B;
    auto mul = [&](const Elem& a, const Elem& b) {
        const BigInt hi = a.c1 * b.c1;  // coefficient of x^2 = A x - B
        return Elem{hi * A + a.c1 * b.c0 + a.c0 * b.c1, a.c0 * b.c0 - hi * B};
    };
    Elem result{0, 1};
    Elem base{1, 0};
    while (n > 0) {
        if (n & 1U) result = mul(result, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result.c1;
}

/// Independent degeneracy test: alpha/beta is a root of unity of order
/// dividing one of 1, 2, 3, 4, 6 exactly when some U_k, 1 <= k <= 6, vanishes.
inline bool is_degenerate_oracle(LucasParams p) {
    if (!is_valid(p)) {
        throw std::invalid_argument("is_degenerate_oracle: requires A B (A^2 - 4B) != 0");
    }
    BigInt prev = 0;
    BigInt cur = 1;
    for (int k = 1; k <= 6; ++k) {
        if (cur == 0) return true;
        BigInt next = p.A * cur - p.B * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return false;
}

/// |U_n| if it is at most `limit`, std::nullopt otherwise. 128-bit arithmetic
/// with overflow checks; falls back to big integers when an intermediate
/// term leaves the 128-bit range.
inline std::optional<std::uint64_t> abs_term_if_at_most(LucasParams p, unsigned n, std::uint64_t limit) {
    if (n == 0) return 0;
    i128 prev = 0;
    i128 cur = 1;
    const i128 a = p.A;
    const i128 b = p.B;
    for (unsigned k = 1; k < n; ++k) {
        i128 x, y, next;
        if (__builtin_mul_overflow(a, cur, &x) || __builtin_mul_overflow(b, prev, &y) ||
            __builtin_sub_overflow(x, y, &next)) {
            const BigInt exact = abs(term(p, n));
            if (exact > limit) return std::nullopt;
            return static_cast<std::uint64_t>(exact);
        }
        prev = cur;
        cur = next;
    }
    const i128 mag = cur < 0 ? -cur : cur;
    if (mag > static_cast<i128>(limit)) return std::nullopt;
    return static_cast<std::uint64_t>(mag);
}

}  // namespace lucas
