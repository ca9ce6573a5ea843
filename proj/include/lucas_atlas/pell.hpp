#pragma once

// x^2 - 5 y^2 = t: box enumeration, orbit seeds under the unit 9 + 4 sqrt 5,
// and the solution-count check used for the index-5 term sets.

#include "numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace lucas::pell {

struct PellPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const PellPoint&, const PellPoint&) = default;
    friend auto operator<=>(const PellPoint&, const PellPoint&) = default;
};

struct PellSolutionList {
    std::int64_t t = 1;
    std::uint64_t box_y = 1;
    std::vector<PellPoint> solutions;  // x > 0, 1 <= y <= box_y, sorted by y
    std::vector<PellPoint> families;   // one seed (u, v) per orbit, 0 < u < sqrt((22 + 9 sqrt5)|t| / 8)
};

inline constexpr std::int64_t kMaxAbsT = 100'000'000;
inline constexpr std::uint64_t kMaxBoxY = 1'000'000;

inline std::int64_t norm(PellPoint p) { return p.x * p.x - 5 * p.y * p.y; }

namespace detail {

// Multiply by 9 + 4 sqrt5 or by its inverse 9 - 4 sqrt5.
inline PellPoint times_unit(PellPoint p) { return {9 * p.x + 20 * p.y, 4 * p.x + 9 * p.y}; }
inline PellPoint times_unit_inverse(PellPoint p) { return {9 * p.x - 20 * p.y, 9 * p.y - 4 * p.x}; }

inline auto orbit_key(PellPoint p) {
    return std::make_tuple(p.x < 0 ? -p.x : p.x, p.y < 0 ? -p.y : p.y, p.x, p.y);
}

}  // namespace detail

/// Orbit-minimal element: |x| is unimodal along an orbit, so a strict descent
/// in (|x|, |y|, x, y) from any member reaches the minimum.
inline PellPoint orbit_minimal(PellPoint p) {
    for (;;) {
        const PellPoint down = detail::times_unit_inverse(p);
        const PellPoint up = detail::times_unit(p);
        if (detail::orbit_key(down) < detail::orbit_key(p)) {
            p = down;
        } else if (detail::orbit_key(up) < detail::orbit_key(p)) {
            p = up;
        } else {
            return p;
        }
    }
}

/// Seeds (u, v) with 0 < u < sqrt((22 + 9 sqrt5)|t| / 8) and u^2 - 5 v^2 = t,
/// one per orbit.
inline std::vector<PellPoint> pell_seeds(std::int64_t t) {
    if (t == 0) throw std::invalid_argument("pell: t must be nonzero");
    const long double limit2 = (22.0L + 9.0L * std::sqrt(5.0L)) * static_cast<long double>(t < 0 ? -t : t) / 8.0L;
    std::vector<std::pair<PellPoint, PellPoint>> keyed;  // (orbit minimum, seed)
    for (std::int64_t u = 1; static_cast<long double>(u) * u < limit2; ++u) {
        const std::int64_t rest = u * u - t;
        if (rest < 0 || rest % 5 != 0) continue;
        std::int64_t v = 0;
        if (!is_perfect_square(rest / 5, &v)) continue;
        for (const std::int64_t sv : {v, -v}) {
            const PellPoint seed{u, sv};
            keyed.emplace_back(orbit_minimal(seed), seed);
            if (v == 0) break;
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    });
    std::vector<PellPoint> seeds;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || !(keyed[i].first == keyed[i - 1].first)) seeds.push_back(keyed[i].second);
    }
    return seeds;
}

/// All positive (x, y) with x^2 - 5 y^2 = t and y <= y_max, by direct scan.
inline PellSolutionList pell_solve_box(std::int64_t t, std::uint64_t y_max) {
    if (t == 0) throw std::invalid_argument("pell: t must be nonzero");
    if (t > kMaxAbsT || t < -kMaxAbsT) throw std::invalid_argument("pell: |t| must be <= 10^8");
    if (y_max == 0 || y_max > kMaxBoxY) throw std::invalid_argument("pell: y_max must lie in [1, 10^6]");
    PellSolutionList out;
    out.t = t;
    out.box_y = y_max;
    for (std::int64_t y = 1; y <= static_cast<std::int64_t>(y_max); ++y) {
        const std::int64_t x2 = 5 * y * y + t;
        std::int64_t x = 0;
        if (x2 > 0 && is_perfect_square(x2, &x)) out.solutions.push_back({x, y});
    }
    out.families = pell_seeds(t);
    return out;
}

/// y-values of the orbit of (u, v): G_0 = v, G_1 = 4u + 9v,
/// G_{k+2} = 18 G_{k+1} - G_k. Returns G_0 .. G_steps.
inline std::vector<BigInt> pell_family_extend(std::int64_t t, PellPoint seed, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("pell_family_extend: steps must be positive");
    if (norm(seed) != t) throw std::invalid_argument("pell_family_extend: seed is not on x^2 - 5y^2 = t");
    std::vector<BigInt> ys;
    ys.reserve(steps + 1);
    ys.emplace_back(seed.y);
    ys.emplace_back(4 * seed.x + 9 * seed.y);
    while (ys.size() < steps + 1) {
        ys.push_back(18 * ys[ys.size() - 1] - ys[ys.size() - 2]);
    }
    return ys;
}

/// 5 y^2 + t is a perfect square.
inline bool on_conic(std::int64_t t, const BigInt& y) {
    const BigInt x2 = 5 * y * y + t;
    if (x2 < 0) return false;
    const BigInt r = sqrt(x2);
    return r * r == x2;
}

struct PellCountRow {
    std::int64_t t = 0;
    std::uint64_t count = 0;
};

struct PellCountReport {
    std::uint64_t T = 0;
    std::uint64_t y_max = 0;   // floor(sqrt(T) / 2)
    Real bound;                // T^{4 / log log T}
    std::vector<PellCountRow> rows;
    std::uint64_t max_count = 0;
    bool all_within = true;
};

/// Counts positive solutions with y <= sqrt(T)/2 for each t in `ts` (or, when
/// empty, every nonzero |t| <= 4T) and compares against T^{4 / log log T}.
inline PellCountReport lem5_count_check(std::uint64_t T, std::vector<std::int64_t> ts = {}) {
    if (T < 100) throw std::invalid_argument("lem5_count_check: T must be >= 100");
    if (T > static_cast<std::uint64_t>(kMaxAbsT) / 4) throw std::invalid_argument("lem5_count_check: T too large");
    PellCountReport rep;
    rep.T = T;
    rep.y_max = isqrt_u64(T / 4);
    const Real lt = log(Real(T));
    rep.bound = exp(4 * lt / log(lt));
    if (ts.empty()) {
        const auto lim = static_cast<std::int64_t>(4 * T);
        for (std::int64_t t = -lim; t <= lim; ++t) {
            if (t != 0) ts.push_back(t);
        }
    }
    for (const std::int64_t t : ts) {
        if (t == 0 || static_cast<std::uint64_t>(t < 0 ? -t : t) > 4 * T) {
            throw std::invalid_argument("lem5_count_check: need 0 < |t| <= 4T");
        }
        std::uint64_t count = 0;
        for (std::int64_t y = 1; y <= static_cast<std::int64_t>(rep.y_max); ++y) {
            const std::int64_t x2 = 5 * y * y + t;
            if (x2 > 0 && is_perfect_square(x2)) ++count;
        }
        rep.rows.push_back({t, count});
        rep.max_count = std::max(rep.max_count, count);
        if (Real(count) > rep.bound) rep.all_within = false;
    }
    return rep;
}

}  // namespace lucas::pell
