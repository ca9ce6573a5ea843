#pragma once

// Parameter-free lower bounds for |U_n|, the two-logarithm bound behind the
// non-real case, and the continued-fraction indices where |U_n| dips.

#include "lucas_core.hpp"
#include "numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace lucas::growth {

enum class GrowthBranch { RealNegB, RealPosB, NonRealSmallB, NonRealLargeB };

inline std::string_view to_string(GrowthBranch b) {
    switch (b) {
        case GrowthBranch::RealNegB: return "real_neg_b";
        case GrowthBranch::RealPosB: return "real_pos_b";
        case GrowthBranch::NonRealSmallB: return "non_real_small_b";
        case GrowthBranch::NonRealLargeB: return "non_real_large_b";
    }
    return "?";
}

struct GrowthBound {
    std::uint64_t n = 2;
    GrowthBranch branch = GrowthBranch::RealNegB;
    Real value;      // lower bound for |U_n|
    Real log_value;  // log(value); finite even where value underflows a double
};

// Branch boundaries. B = e^{2 pi} is not an integer, so B <= 535 is the small side.
inline constexpr std::int64_t kSmallBMax = 535;
inline constexpr std::uint64_t kSmallBIndexSwitch = 500'000'000;  // 5 * 10^8
inline constexpr std::uint64_t kLargeBIndexSwitch = 210'000'000;  // 2.1 * 10^8

inline GrowthBound growth_lower_bound(LucasParams p, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("growth_lower_bound: n must be >= 2");
    const SequenceKind kind = classify_kind(p);
    if (kind != SequenceKind::RealCase && kind != SequenceKind::NonRealCase) {
        throw std::invalid_argument("growth_lower_bound: requires a non-degenerate sequence");
    }
    const Real log_alpha = log(dominant_root_abs(p));
    const Real nr = Real(n);
    GrowthBound out;
    out.n = n;
    if (kind == SequenceKind::RealCase) {
        if (p.B < 0) {
            out.branch = GrowthBranch::RealNegB;
            out.log_value = (nr - 2) * log_alpha - log(Real(2));
        } else {
            out.branch = GrowthBranch::RealPosB;
            out.log_value = (nr - 1) * log_alpha;
        }
    } else {
        const Real log4 = log(Real(4));
        const Real logn = log(nr);
        if (p.B <= kSmallBMax) {
            out.branch = GrowthBranch::NonRealSmallB;
            const Real loss = n > kSmallBIndexSwitch ? Real(250 * logn * logn) : Real(100000);
            out.log_value = (nr - 2) * log_alpha - loss - log4;
        } else {
            out.branch = GrowthBranch::NonRealLargeB;
            const Real exponent = n > kLargeBIndexSwitch ? Real(nr - 2 - 88 * logn * logn) : Real(nr - 31710);
            out.log_value = exponent * log_alpha - log4;
        }
    }
    out.value = exp(out.log_value);
    return out;
}

/// Parameters of the linear form b2 log a2 - b1 log a1.
struct LinFormParams {
    Real D;              // degree parameter
    Real logA1, logA2;   // height majorants
    std::int64_t b1 = 1, b2 = 1;
    Real b_prime;        // |b1| / (D log A2) + |b2| / (D log A1)
};

inline LinFormParams make_lin_form_params(const Real& D, const Real& logA1, const Real& logA2,
                                          std::int64_t b1, std::int64_t b2) {
    if (logA1 <= 0 || logA2 <= 0) throw std::invalid_argument("linear form: log A_i must be positive");
    if (b1 == 0 || b2 == 0) throw std::invalid_argument("linear form: b1 b2 must be nonzero");
    LinFormParams p{D, logA1, logA2, b1, b2, Real(0)};
    p.b_prime = Real(b1 < 0 ? -b1 : b1) / (D * logA2) + Real(b2 < 0 ? -b2 : b2) / (D * logA1);
    return p;
}

/// -25.2 D^4 (max{log b' + 0.21, 20/D, 1})^2 log A1 log A2. The caller is
/// responsible for multiplicative independence of the two numbers.
inline Real laurent_log_lower_bound(const LinFormParams& p) {
    if (p.logA1 <= 0 || p.logA2 <= 0) throw std::invalid_argument("laurent: log A_i must be positive");
    if (p.b1 == 0 || p.b2 == 0) throw std::invalid_argument("laurent: b1 b2 must be nonzero");
    if (p.D <= 0 || p.b_prime <= 0) throw std::invalid_argument("laurent: D and b' must be positive");
    Real m = log(p.b_prime) + Real("0.21");
    const Real twenty_over_d = 20 / p.D;
    if (twenty_over_d > m) m = twenty_over_d;
    if (m < 1) m = 1;
    const Real d2 = p.D * p.D;
    return -Real("25.2") * d2 * d2 * m * m * p.logA1 * p.logA2;
}

inline Real laurent_lower_bound(const LinFormParams& p) { return exp(laurent_log_lower_bound(p)); }

/// log A_delta for delta = beta/alpha: h(delta) = (log B)/2 and |log delta| <= pi,
/// so log A_delta = pi while B <= 535 and (log B)/2 from B = 536 on.
inline Real delta_log_height_majorant(LucasParams p) {
    return p.B <= kSmallBMax ? real_pi() : Real(log(Real(p.B)) / 2);
}

/// log of (1/2) exp(-25.2 pi D^3 (max{log((pi + D log A)|l| / (pi D log A)) + 0.21, 20/D, 1})^2 log A)
/// with D = 1 and delta = beta/alpha.
inline Real delta_power_minus_one_log_bound(LucasParams p, std::int64_t ell) {
    if (classify_kind(p) != SequenceKind::NonRealCase) {
        throw std::invalid_argument("delta bound: requires a non-degenerate non-real sequence");
    }
    if (ell == 0) throw std::invalid_argument("delta bound: ell must be nonzero");
    const Real pi = real_pi();
    const Real logA = delta_log_height_majorant(p);
    const Real abs_ell = Real(ell < 0 ? -ell : ell);
    Real m = log((pi + logA) * abs_ell / (pi * logA)) + Real("0.21");
    if (m < 20) m = 20;  // 20/D with D = 1 also dominates the constant 1
    return -log(Real(2)) - Real("25.2") * pi * m * m * logA;
}

inline Real delta_power_minus_one_bound(LucasParams p, std::int64_t ell) {
    return exp(delta_power_minus_one_log_bound(p, ell));
}

/// arg(alpha) for the non-real case, in (0, pi): alpha = sqrt(B) e^{i psi}.
inline Real root_argument(LucasParams p) {
    return acos(Real(p.A) / (2 * sqrt(Real(p.B))));
}

/// |(beta/alpha)^n - 1| = 2 |sin(n psi)|.
inline Real ratio_power_distance(LucasParams p, std::uint64_t n) {
    return 2 * abs(sin(Real(n) * root_argument(p)));
}

struct SmallRatioResult {
    std::vector<std::uint64_t> indices;  // convergent denominators of theta
    Real max_scaled_deviation;           // max over indices of n |(beta/alpha)^n - 1|
};

/// Writing beta/alpha = e^{2 pi i theta}, returns the first `count` convergent
/// denominators q of theta; there |q theta - p| < 1/q, so |U_q| |alpha - beta|
/// / |alpha|^q = |(beta/alpha)^q - 1| <= 2 pi / q.
inline SmallRatioResult small_ratio_indices(LucasParams p, std::size_t count) {
    if (classify_kind(p) != SequenceKind::NonRealCase) {
        throw std::invalid_argument("small_ratio_indices: requires a non-degenerate non-real sequence");
    }
    if (count == 0) throw std::invalid_argument("small_ratio_indices: count must be positive");
    const Real pi = real_pi();
    const Real theta = 1 - root_argument(p) / pi;  // beta/alpha = e^{-2 i psi}
    SmallRatioResult out;
    out.max_scaled_deviation = 0;
    // Usable partial quotients shrink with precision; stop well before noise.
    const Real noise = pow(Real(2), -static_cast<int>(current_precision_bits() / 2));
    unsigned __int128 q_prev = 0;
    unsigned __int128 q = 1;
    Real x = theta;
    while (out.indices.size() < count) {
        const Real frac = x - floor(x);
        if (frac < noise) throw std::runtime_error("small_ratio_indices: precision exhausted");
        x = 1 / frac;
        const auto a = static_cast<std::uint64_t>(floor(x));
        const unsigned __int128 q_next = static_cast<unsigned __int128>(a) * q + q_prev;
        if (q_next > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("small_ratio_indices: denominator exceeds 64 bits");
        }
        q_prev = q;
        q = q_next;
        const auto qn = static_cast<std::uint64_t>(q);
        out.indices.push_back(qn);
        const Real scaled = Real(qn) * ratio_power_distance(p, qn);
        if (scaled > out.max_scaled_deviation) out.max_scaled_deviation = scaled;
    }
    return out;
}

/// h(beta/alpha) from the Mahler measure of B x^2 - (A^2 - 2B) x + B.
inline Real ratio_height(LucasParams p) {
    const Real a = Real(p.B);
    const Real b = -(Real(p.A) * p.A - 2 * Real(p.B));
    const Real c = Real(p.B);
    const Real disc = b * b - 4 * a * c;
    Real r1, r2;
    if (disc < 0) {
        const Real re = -b / (2 * a);
        const Real im = sqrt(-disc) / (2 * a);
        r1 = r2 = sqrt(re * re + im * im);
    } else {
        r1 = abs((-b + sqrt(disc)) / (2 * a));
        r2 = abs((-b - sqrt(disc)) / (2 * a));
    }
    const Real mahler = abs(a) * (r1 > 1 ? r1 : Real(1)) * (r2 > 1 ? r2 : Real(1));
    return log(mahler) / 2;
}

struct SweepReport {
    std::uint64_t pairs = 0;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;          // |U_n| < growth_lower_bound
    std::uint64_t remark_violations = 0;   // root-size and golden-ratio floors
    std::vector<std::pair<LucasParams, std::uint64_t>> first_failures;
};

/// Checks |U_n| >= growth_lower_bound for every non-degenerate |A| <= a_max,
/// |B| <= b_max and 2 <= n <= n_max, together with the root-size floors:
/// real case |alpha| >= 2 unless (A, B) = (+-1, -1), |U_n| >= phi^{n-2}/2, and
/// non-real case |alpha| = sqrt(B) >= sqrt(2).
inline SweepReport growth_sweep(std::int64_t a_max, std::int64_t b_max, std::uint64_t n_max) {
    SweepReport rep;
    const Real phi = (1 + sqrt(Real(5))) / 2;
    const Real half = Real(1) / 2;
    auto record = [&](LucasParams p, std::uint64_t n) {
        if (rep.first_failures.size() < 16) rep.first_failures.emplace_back(p, n);
    };
    for (std::int64_t A = -a_max; A <= a_max; ++A) {
        for (std::int64_t B = -b_max; B <= b_max; ++B) {
            const LucasParams p{A, B};
            const SequenceKind kind = classify_kind(p);
            if (kind != SequenceKind::RealCase && kind != SequenceKind::NonRealCase) continue;
            ++rep.pairs;
            const Real alpha = dominant_root_abs(p);
            if (kind == SequenceKind::RealCase) {
                const bool fibonacci = (A == 1 || A == -1) && B == -1;
                if (!fibonacci && alpha < 2) {
                    ++rep.remark_violations;
                    record(p, 0);
                }
            } else if (alpha * alpha < 2 || B < 2) {
                ++rep.remark_violations;
                record(p, 0);
            }
            BigInt prev = 1;  // U_1
            BigInt cur = A;   // U_2
            Real golden = half;  // phi^{n-2} / 2
            // Below the index switches every branch is alpha^{n - c} times a
            // constant, so the bound advances by one factor of alpha per step
            // and is re-anchored on the exact formula every 64 indices.
            Real bound;
            for (std::uint64_t n = 2; n <= n_max; ++n) {
                if (n > 2) {
                    BigInt next = A * cur - B * prev;
                    prev = std::move(cur);
                    cur = std::move(next);
                    golden *= phi;
                }
                if (n % 64 == 2 || n > kLargeBIndexSwitch) {
                    bound = growth_lower_bound(p, n).value;
                } else {
                    bound *= alpha;
                }
                ++rep.checks;
                // Boost 1.74 mis-converts negated mpz expressions to mpfr, so
                // evaluate the magnitude as an integer first.
                const BigInt abs_cur = abs(cur);
                const Real mag(abs_cur);
                if (mag < bound) {
                    ++rep.violations;
                    record(p, n);
                }
                if (kind == SequenceKind::RealCase && mag < golden) {
                    ++rep.remark_violations;
                    record(p, n);
                }
            }
        }
    }
    return rep;
}

}  // namespace lucas::growth
