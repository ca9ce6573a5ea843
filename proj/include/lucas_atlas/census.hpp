#pragma once

// Exact count of non-degenerate Lucas sequences (pairs (A, B)) whose dominant
// root satisfies |alpha| <= t, for rational t >= 2.

#include "lucas_core.hpp"
#include "numeric.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace lucas {

/// Exact rational num/den, den > 0, reduced.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    static Rational make(BigInt num, BigInt den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const BigInt g = gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return Rational{std::move(num), std::move(den)};
    }

    /// Accepts "7", "-2.5", "10/3".
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            return make(parse_decimal_integer(text.substr(0, slash)), parse_decimal_integer(text.substr(slash + 1)));
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return make(parse_decimal_integer(text), 1);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("not a decimal number: " + text);
        }
        std::string head = text.substr(0, dot);
        const bool neg = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") head += "0";
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt whole = abs(parse_decimal_integer(head));
        BigInt num = whole * scale + parse_decimal_integer(frac);
        return make(neg ? BigInt(-num) : num, scale);
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Exact decimal when den = 2^a 5^b, otherwise 30 significant digits.
    std::string to_decimal_string() const {
        BigInt d = den;
        unsigned twos = 0, fives = 0;
        while (d % 2 == 0) { d /= 2; ++twos; }
        while (d % 5 == 0) { d /= 5; ++fives; }
        if (d != 1) return format_real(Real(num) / Real(den));
        const unsigned places = std::max(twos, fives);
        const BigInt scaled = num * boost::multiprecision::pow(BigInt(10), places) / den;
        const bool neg = scaled < 0;
        std::string digits = BigInt(abs(scaled)).str();
        if (places == 0) return (neg ? "-" : "") + digits;
        if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
        digits.insert(digits.size() - places, ".");
        return (neg ? "-" : "") + digits;
    }

    friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }

private:
    static BigInt parse_decimal_integer(const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos) {
            throw std::invalid_argument("not an integer: " + s);
        }
        BigInt v(s.substr(i));
        return s[0] == '-' ? BigInt(-v) : v;
    }
};

namespace census {

inline constexpr std::int64_t kDefaultCap = 10'000;

struct CensusBreakdown {
    std::uint64_t non_real = 0;
    std::uint64_t real_pos_b = 0;
    std::uint64_t real_neg_b = 0;
};

struct CensusResult {
    Rational t;
    std::uint64_t exact_count = 0;
    Rational lower_formula;   // 4t^3 - 10t^2 - 29t, unclamped
    Rational upper_formula;   // 4t^3 - t^2 + 7t
    CensusBreakdown breakdown;  // A > 0 only, before doubling

    bool sandwich_holds() const {
        const Rational c = Rational::make(BigInt(exact_count), 1);
        return lower_formula <= c && c <= upper_formula;
    }
};

inline std::pair<Rational, Rational> census_bounds(const Rational& t) {
    const BigInt& p = t.num;
    const BigInt& q = t.den;
    const BigInt q3 = q * q * q;
    const BigInt p3 = p * p * p;
    Rational lower = Rational::make(4 * p3 - 10 * p * p * q - 29 * p * q * q, q3);
    Rational upper = Rational::make(4 * p3 - p * p * q + 7 * p * q * q, q3);
    return {std::move(lower), std::move(upper)};
}

namespace detail {

inline std::int64_t floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return static_cast<std::int64_t>(q);
}

// Non-real pairs with A >= 1, A^2 < 4B, B in [b_lo, b_hi]; degenerate pairs
// removed through classify_kind (only A^2 in {B, 2B, 3B} can qualify).
inline std::uint64_t count_non_real(std::int64_t b_lo, std::int64_t b_hi) {
    std::uint64_t count = 0;
    for (std::int64_t B = b_lo; B <= b_hi; ++B) {
        const auto a_max = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(4 * B - 1)));
        count += static_cast<std::uint64_t>(a_max);
        for (std::int64_t c = 1; c <= 3; ++c) {
            std::int64_t a = 0;
            if (is_perfect_square(c * B, &a) && a >= 1 && a <= a_max &&
                classify_kind(LucasParams{a, B}) == SequenceKind::Degenerate) {
                --count;
            }
        }
    }
    return count;
}

}  // namespace detail

/// |alpha| <= t tested exactly: non-real B q^2 <= p^2; real (A > 0) needs
/// 2p - A q >= 0 and (A^2 - 4B) q^2 <= (2p - A q)^2.
inline bool dominant_root_at_most(LucasParams pr, const Rational& t) {
    const BigInt& p = t.num;
    const BigInt& q = t.den;
    const BigInt d = to_big(discriminant(pr));
    if (d < 0) return BigInt(pr.B) * q * q <= p * p;
    const BigInt slack = 2 * p - BigInt(pr.A < 0 ? -pr.A : pr.A) * q;
    return slack >= 0 && d * q * q <= slack * slack;
}

inline CensusResult census(const Rational& t, unsigned jobs = 1, std::int64_t cap = kDefaultCap) {
    if (t < Rational::make(2, 1)) throw std::invalid_argument("census: t must be >= 2");
    if (Rational::make(cap, 1) < t) throw std::invalid_argument("census: t exceeds the cap");
    const BigInt& p = t.num;
    const BigInt& q = t.den;
    CensusResult out;
    out.t = t;
    std::tie(out.lower_formula, out.upper_formula) = census_bounds(t);

    // Non-real: 1 <= B <= t^2, sharded by B.
    const std::int64_t b_top = detail::floor_div(p * p, q * q);
    jobs = std::max(1u, jobs);
    std::vector<std::uint64_t> partial(jobs, 0);
    {
        std::vector<std::thread> workers;
        const std::int64_t span = (b_top + jobs - 1) / static_cast<std::int64_t>(jobs);
        for (unsigned j = 0; j < jobs; ++j) {
            const std::int64_t lo = 1 + static_cast<std::int64_t>(j) * span;
            const std::int64_t hi = std::min(b_top, lo + span - 1);
            if (lo > hi) continue;
            workers.emplace_back([&partial, j, lo, hi] { partial[j] = detail::count_non_real(lo, hi); });
        }
        for (auto& w : workers) w.join();
    }
    out.breakdown.non_real = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});

    // Real, B > 0: 1 <= A <= 2t, max(1, At - t^2) <= B, 4B < A^2.
    // Every degenerate family has 3B >= A^2, so none occur here.
    const std::int64_t a_top = detail::floor_div(2 * p, q);
    for (std::int64_t A = 1; A <= a_top; ++A) {
        const BigInt num = BigInt(A) * p * q - p * p;
        const std::int64_t b_min = std::max<std::int64_t>(1, -detail::floor_div(-num, q * q));
        const std::int64_t b_max = (A * A - 1) / 4;
        if (b_max >= b_min) out.breakdown.real_pos_b += static_cast<std::uint64_t>(b_max - b_min + 1);
    }

    // Real, B < 0: 1 <= A, 1 <= -B <= t^2 - At.
    for (std::int64_t A = 1;; ++A) {
        const std::int64_t nb_max = detail::floor_div(p * p - BigInt(A) * p * q, q * q);
        if (nb_max < 1) break;
        out.breakdown.real_neg_b += static_cast<std::uint64_t>(nb_max);
    }

    out.exact_count = 2 * (out.breakdown.non_real + out.breakdown.real_pos_b + out.breakdown.real_neg_b);
    return out;
}

inline constexpr std::int64_t kOracleCap = 60;

/// Naive count over |A| <= 2t, |B| <= t^2 with the exact root test.
inline std::uint64_t census_oracle(const Rational& t) {
    if (t < Rational::make(2, 1)) throw std::invalid_argument("census oracle: t must be >= 2");
    if (Rational::make(kOracleCap, 1) < t) throw std::invalid_argument("census oracle: t exceeds the cap");
    const std::int64_t a_top = detail::floor_div(2 * t.num, t.den);
    const std::int64_t b_top = detail::floor_div(t.num * t.num, t.den * t.den);
    std::uint64_t count = 0;
    for (std::int64_t A = -a_top; A <= a_top; ++A) {
        for (std::int64_t B = -b_top; B <= b_top; ++B) {
            const LucasParams p{A, B};
            if (is_nondegenerate(p) && dominant_root_at_most(p, t)) ++count;
        }
    }
    return count;
}

}  // namespace census
}  // namespace lucas
