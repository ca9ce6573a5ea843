#pragma once

// Arithmetic utilities: divisor counts, Fibonacci numbers, exact integer
// roots and coprime pair counting.

#include "numeric.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace lucas::numutil {

struct DivisorProfile {
    std::uint64_t k = 1;
    std::uint64_t tau = 1;    // number of positive divisors
    unsigned omega = 0;       // number of distinct prime divisors
};

inline constexpr std::uint64_t kMaxTauArgument = 1'000'000'000'000ULL;

/// Trial division up to sqrt(k); k <= 10^12 keeps this under 10^6 steps.
inline DivisorProfile divisor_profile(std::uint64_t k) {
    if (k == 0 || k > kMaxTauArgument) {
        throw std::invalid_argument("divisor_profile: k must lie in [1, 10^12]");
    }
    DivisorProfile out{k, 1, 0};
    std::uint64_t rest = k;
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.tau *= e + 1;
        ++out.omega;
    }
    if (rest > 1) {
        out.tau *= 2;
        ++out.omega;
    }
    return out;
}

inline std::uint64_t tau(std::uint64_t k) { return divisor_profile(k).tau; }

/// tau(k) <= k^{1.5379 log 2 / log log k}, evaluated at the current precision.
inline bool tau_bound_check(std::uint64_t k) {
    if (k < 3) throw std::invalid_argument("tau_bound_check: requires k >= 3");
    const Real lk = log(Real(k));
    const Real exponent = Real("1.5379") * log(Real(2)) / log(lk);
    const Real bound = exp(exponent * lk);
    return Real(tau(k)) <= bound;
}

/// F*_n with F*_0 = 0, F*_1 = 1 (GMP's closed routine).
inline BigInt fibonacci_number(unsigned long n) {
    BigInt out;
    mpz_fib_ui(out.backend().data(), n);
    return out;
}

/// Number of pairs (x, y) with |x| <= N, |y| <= N^2 and gcd(x, y) = 1, using
/// gcd(0, m) = |m|.
inline std::uint64_t coprime_pair_count(std::uint64_t N) {
    if (N > 200) throw std::invalid_argument("coprime_pair_count: N must be <= 200");
    const std::int64_t xmax = static_cast<std::int64_t>(N);
    const std::int64_t ymax = xmax * xmax;
    std::uint64_t count = 0;
    for (std::int64_t x = -xmax; x <= xmax; ++x) {
        for (std::int64_t y = -ymax; y <= ymax; ++y) {
            if (std::gcd(x, y) == 1) ++count;
        }
    }
    return count;
}

namespace detail {

// base^k <= limit, with early exit once the running product passes limit.
inline bool pow_leq(std::uint64_t base, unsigned k, std::uint64_t limit) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= base;
        if (acc > limit) return false;
    }
    return true;
}

}  // namespace detail

/// floor(x^{1/k}) by binary search with exact powering.
inline std::uint64_t integer_kth_root(std::uint64_t x, unsigned k) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be positive");
    if (k == 1 || x < 2) return x;
    std::uint64_t lo = 1;
    // hi^k > 2^64 > x, lo^k <= x.
    std::uint64_t hi = k >= 64 ? 2 : (std::uint64_t{1} << (64 / k + 1));
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (detail::pow_leq(mid, k, x)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

inline BigInt integer_kth_root(const BigInt& x, unsigned k) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be positive");
    if (x < 0) throw std::invalid_argument("integer_kth_root: x must be nonnegative");
    if (k == 1 || x < 2) return x;
    BigInt lo = 1;
    BigInt hi = 1;
    while (boost::multiprecision::pow(hi, k) <= x) hi <<= 1;
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, k) <= x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace lucas::numutil
