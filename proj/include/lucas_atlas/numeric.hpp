#pragma once

// Shared numeric types: exact big integers (GMP) and configurable-precision
// reals (MPFR), plus a few helpers used across the library.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace lucas {

using BigInt = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;
using i128 = __int128;

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kVerificationPrecisionBits = 512;

/// Decimal digits handed to Boost so that the MPFR mantissa carries at least
/// `bits` bits.
inline unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

inline unsigned current_precision_bits() {
    return static_cast<unsigned>(
        boost::multiprecision::detail::digits10_2_2(Real::default_precision()));
}

/// Sets the default MPFR precision for the lifetime of the guard. The Boost
/// default is process-wide, so high-precision work stays on one thread.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned bits) : saved_(Real::default_precision()) {
        Real::default_precision(digits10_for_bits(bits));
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

/// Precision requested through LUCAS_ATLAS_PREC, falling back to 256 bits.
inline unsigned precision_from_env() {
    const char* raw = std::getenv("LUCAS_ATLAS_PREC");
    if (raw == nullptr || *raw == '\0') return kDefaultPrecisionBits;
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 32 || v > 1u << 20) {
        throw std::invalid_argument("LUCAS_ATLAS_PREC must be an integer in [32, 2^20]");
    }
    return static_cast<unsigned>(v);
}

inline Real real_pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const BigInt& v) { return Real(v); }
inline Real to_real(std::int64_t v) { return Real(v); }

inline BigInt to_big(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-out) : out;
}

/// Fixed-notation decimal string with `digits` significant digits; used for
/// every real that lands in a report.
inline std::string format_real(const Real& x, int digits = 30) {
    if (x == 0) return "0";
    return x.str(digits, std::ios_base::scientific);
}

/// floor(sqrt(x)) for unsigned 64-bit x, exact.
inline std::uint64_t isqrt_u64(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (static_cast<unsigned __int128>(r) * r > x) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline bool is_perfect_square(std::int64_t x, std::int64_t* root = nullptr) {
    if (x < 0) return false;
    const auto r = isqrt_u64(static_cast<std::uint64_t>(x));
    if (static_cast<std::uint64_t>(r) * r != static_cast<std::uint64_t>(x)) return false;
    if (root != nullptr) *root = static_cast<std::int64_t>(r);
    return true;
}

}  // namespace lucas
