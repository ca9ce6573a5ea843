#pragma once

// Exact sets L_n(N) = { |U_n| <= N : U non-degenerate } and their unions over
// indices >= n, with the counting bounds they are certified against.
//
// For n >= 5 the enumeration covers
//   box:  1 <= A < 9 N^{1/(n-1)},  |B| < 17 N^{2/(n-1)}
//   tail: B >= 17 N^{2/(n-1)}, A near the real zeros 2 sqrt(B) cos(k pi / n)
// Pairs with A >= 9 N^{1/(n-1)} and small |B|, or with B <= -17 N^{2/(n-1)},
// never reach |F_n| <= N; case2_scan / case3_scan verify that directly.
//
// For B > 0 every zero of x -> F_n(x, B) is real, so |F_n| is log-concave
// between consecutive zeros and monotone beyond the extreme ones. Each
// connected piece of { x : |F_n(x, B)| <= N } is therefore an interval around a
// zero, and walking outward from the integers next to each zero finds all of
// its lattice points.

#include "lucas_core.hpp"
#include "numeric.hpp"
#include "numutil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lucas::term_sets {

inline constexpr std::uint64_t kCapLargeIndex = 1'000'000'000;  // n >= 5
inline constexpr std::uint64_t kCapSmallIndex = 10'000'000;     // n in {2, 3, 4}
inline constexpr std::uint64_t kDensityCap = 1'000'000;
inline constexpr unsigned kMaxIndex = 400;

struct TermWitness {
    std::uint64_t value = 0;
    LucasParams params;
    friend bool operator==(const TermWitness&, const TermWitness&) = default;
};

struct TermSetResult {
    unsigned n = 2;
    std::uint64_t N = 1;
    std::uint64_t count = 0;
    std::optional<std::vector<std::uint64_t>> members;     // sorted, distinct, in [1, N]
    std::optional<std::vector<TermWitness>> witnesses;     // one per member, sorted by value
    std::optional<double> upper_bound_value;               // counting bound, n >= 5
    unsigned max_index = 0;                                // largest index scanned (unions)
    std::int64_t tail_end = 0;                             // last B visited in the tail scan
};

struct TermSetOptions {
    bool keep_members = false;
    bool keep_witnesses = false;
    unsigned jobs = 1;
};

struct TermSetBounds {
    double part_i = 0;   // (612 + 2^{20-n} n^2) N^{3/(n-1)}
    double part_ii = 0;  // (612 + 2^{22-n} n^2) N^{3/(n-1)} + 1836 N^{3/n} log N
};

inline TermSetBounds thm22_upper(unsigned n, std::uint64_t N) {
    if (n < 5) throw std::invalid_argument("thm22_upper: n must be >= 5");
    if (N == 0) throw std::invalid_argument("thm22_upper: N must be positive");
    const long double nn = n;
    const long double NN = static_cast<long double>(N);
    const long double head = std::pow(NN, 3.0L / (nn - 1));
    const long double coef_i = 612.0L + std::ldexp(nn * nn, 20 - static_cast<int>(n));
    const long double coef_ii = 612.0L + std::ldexp(nn * nn, 22 - static_cast<int>(n));
    return TermSetBounds{static_cast<double>(coef_i * head),
                       static_cast<double>(coef_ii * head + 1836.0L * std::pow(NN, 3.0L / nn) * std::log(NN))};
}

/// 2^{9-2n} e^{2n} n^2: half-width scale of the A-window in the tail.
inline long double tail_constant(unsigned n) {
    const long double nn = n;
    return std::ldexp(std::exp(2.0L * nn) * nn * nn, 9 - 2 * static_cast<int>(n));
}

/// Integer boundaries of the enumeration regions for n >= 5.
struct Regions {
    std::int64_t a_box = 0;       // largest A with A < 9 N^{1/(n-1)}
    std::int64_t b_box = 0;       // largest |B| with |B| < 17 N^{2/(n-1)}
    std::int64_t tail_start = 0;  // b_box + 1
    std::int64_t tail_quiet = 0;  // first B >= tail_start with c3 N B^{1-n/2} < 1/2
};

namespace detail {

// Largest x >= 0 with x^k < c^k * M.
inline std::int64_t strict_root_bound(unsigned c, unsigned k, const BigInt& M) {
    const BigInt target = boost::multiprecision::pow(BigInt(c), k) * M;
    return static_cast<std::int64_t>(numutil::integer_kth_root(BigInt(target - 1), k));
}

}  // namespace detail

inline Regions regions(unsigned n, std::uint64_t N) {
    if (n < 5) throw std::invalid_argument("regions: n must be >= 5");
    Regions r;
    const unsigned k = n - 1;
    r.a_box = detail::strict_root_bound(9, k, BigInt(N));
    r.b_box = detail::strict_root_bound(17, k, BigInt(N) * N);
    r.tail_start = r.b_box + 1;
    // c3 N B^{1 - n/2} < 1/2  <=>  (n/2 - 1) log B > log(2 c3 N)
    const long double rhs = std::log(2.0L * tail_constant(n) * static_cast<long double>(N));
    const long double slope = n / 2.0L - 1.0L;
    auto quiet = [&](std::int64_t B) { return slope * std::log(static_cast<long double>(B)) > rhs; };
    auto guess = static_cast<std::int64_t>(std::exp(rhs / slope));
    guess = std::max<std::int64_t>(guess, r.tail_start);
    while (guess > r.tail_start && quiet(guess - 1)) --guess;
    while (!quiet(guess)) ++guess;
    r.tail_quiet = guess;
    return r;
}

namespace detail {

struct Hit {
    std::uint64_t value;
    std::int64_t A;
    std::int64_t B;
};

inline bool hit_less(const Hit& a, const Hit& b) {
    return std::tie(a.value, a.A, a.B) < std::tie(b.value, b.A, b.B);
}

// |F_n(A, B)| <= N; records the pair when it is non-degenerate.
struct Prober {
    unsigned n;
    std::uint64_t N;
    std::vector<Hit>* hits;
    std::size_t recorded = 0;

    bool operator()(std::int64_t A, std::int64_t B) {
        const LucasParams p{A, B};
        const auto v = abs_term_if_at_most(p, n, N);
        if (!v) return false;
        if (*v >= 1 && is_nondegenerate(p)) {
            hits->push_back({*v, A, B});
            ++recorded;
        }
        return true;
    }
};

inline void scan_box_strip(unsigned n, std::uint64_t N, std::int64_t a_lo, std::int64_t a_hi, std::int64_t b_box,
                           std::vector<Hit>& hits) {
    Prober probe{n, N, &hits};
    for (std::int64_t A = a_lo; A <= a_hi; ++A) {
        for (std::int64_t B = -b_box; B <= b_box; ++B) {
            if (B != 0) probe(A, B);
        }
    }
}

// All A >= 1 with |F_n(A, B)| <= N for one B > 0. Returns the number of
// non-degenerate pairs recorded.
inline std::size_t scan_positive_b(unsigned n, std::uint64_t N, std::int64_t B, const std::vector<long double>& cosines,
                                   std::vector<Hit>& hits) {
    Prober probe{n, N, &hits};
    for (std::int64_t A = 1; probe(A, B); ++A) {
    }
    const long double two_sqrt_b = 2.0L * std::sqrt(static_cast<long double>(B));
    for (const long double c : cosines) {
        const long double root = two_sqrt_b * c;
        if (root < 1.0L) continue;
        const auto f = static_cast<std::int64_t>(std::floor(root));
        bool in[4];
        for (int i = 0; i < 4; ++i) {
            const std::int64_t A = f - 1 + i;
            in[i] = A >= 1 && probe(A, B);
        }
        if (in[0]) {
            for (std::int64_t A = f - 2; A >= 1 && probe(A, B); --A) {
            }
        }
        if (in[3]) {
            for (std::int64_t A = f + 3; probe(A, B); ++A) {
            }
        }
    }
    return probe.recorded;
}

inline std::vector<long double> positive_cosines(unsigned n) {
    constexpr long double pi = 3.141592653589793238462643383279502884L;
    std::vector<long double> out;
    for (unsigned k = 1; 2 * k < n; ++k) out.push_back(std::cos(pi * k / n));
    return out;
}

// Runs `work(lo, hi, hits)` over [lo, hi] split into `jobs` contiguous chunks.
template <class Work>
std::vector<Hit> parallel_ranges(std::int64_t lo, std::int64_t hi, unsigned jobs, Work work) {
    std::vector<Hit> all;
    if (hi < lo) return all;
    jobs = std::max(1u, jobs);
    const std::int64_t total = hi - lo + 1;
    jobs = static_cast<unsigned>(std::min<std::int64_t>(jobs, total));
    if (jobs == 1) {
        work(lo, hi, all);
        return all;
    }
    std::vector<std::vector<Hit>> parts(jobs);
    std::vector<std::thread> workers;
    const std::int64_t span = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::int64_t a = lo + static_cast<std::int64_t>(j) * span;
        const std::int64_t b = std::min(hi, a + span - 1);
        if (a > b) continue;
        workers.emplace_back([&parts, &work, j, a, b] { work(a, b, parts[j]); });
    }
    for (auto& w : workers) w.join();
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    return all;
}

inline TermSetResult finish(unsigned n, std::uint64_t N, std::vector<Hit>& hits, const TermSetOptions& opt) {
    std::sort(hits.begin(), hits.end(), hit_less);
    TermSetResult out;
    out.n = n;
    out.N = N;
    if (opt.keep_members) out.members.emplace();
    if (opt.keep_witnesses) out.witnesses.emplace();
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (i > 0 && hits[i].value == hits[i - 1].value) continue;
        ++out.count;
        if (out.members) out.members->push_back(hits[i].value);
        if (out.witnesses) out.witnesses->push_back({hits[i].value, {hits[i].A, hits[i].B}});
    }
    return out;
}

// Bitmap form for n in {2, 3, 4}, where the set has positive density.
struct DenseSet {
    std::vector<char> seen;
    std::vector<LucasParams> witness;

    DenseSet(std::uint64_t N, bool keep_witnesses) : seen(N + 1, 0) {
        if (keep_witnesses) witness.assign(N + 1, LucasParams{});
    }

    void mark(std::uint64_t x, LucasParams p) {
        if (seen[x]) return;
        seen[x] = 1;
        if (!witness.empty()) witness[x] = p;
    }
};

inline TermSetResult small_index_set(unsigned n, std::uint64_t N, const TermSetOptions& opt) {
    DenseSet set(N, opt.keep_witnesses);
    const auto NN = static_cast<std::int64_t>(N);
    if (n == 2) {
        // U_2 = A; any B outside the four excluded values works.
        for (std::int64_t A = 1; A <= NN; ++A) {
            for (std::int64_t B = -1; B >= -8; --B) {
                if (is_nondegenerate({A, B})) {
                    set.mark(static_cast<std::uint64_t>(A), {A, B});
                    break;
                }
            }
        }
    } else if (n == 3) {
        // U_3 = A^2 - B: B = A^2 -+ x for any A; at most four B per A are excluded.
        for (std::int64_t x = 1; x <= NN; ++x) {
            bool found = false;
            for (std::int64_t A = 1; A <= 16 && !found; ++A) {
                for (const std::int64_t B : {A * A - x, A * A + x}) {
                    if (is_nondegenerate({A, B})) {
                        set.mark(static_cast<std::uint64_t>(x), {A, B});
                        found = true;
                        break;
                    }
                }
            }
        }
    } else {
        // U_4 = A (A^2 - 2B): with m = A^2 - 2B (same parity as A), |U_4| = A |m|.
        for (std::int64_t A = 1; A <= NN; ++A) {
            const std::int64_t m_max = NN / A;
            for (std::int64_t m = -m_max; m <= m_max; ++m) {
                if (m == 0 || ((m - A) % 2) != 0) continue;
                const std::int64_t B = (A * A - m) / 2;
                if (is_nondegenerate({A, B})) set.mark(static_cast<std::uint64_t>(A * (m < 0 ? -m : m)), {A, B});
            }
        }
    }
    TermSetResult out;
    out.n = n;
    out.N = N;
    if (opt.keep_members) out.members.emplace();
    if (opt.keep_witnesses) out.witnesses.emplace();
    for (std::uint64_t x = 1; x <= N; ++x) {
        if (!set.seen[x]) continue;
        ++out.count;
        if (out.members) out.members->push_back(x);
        if (out.witnesses) out.witnesses->push_back({x, set.witness[x]});
    }
    return out;
}

}  // namespace detail

/// L_n(N), exact over the enumeration regions described at the top of this file.
inline TermSetResult ln_set(unsigned n, std::uint64_t N, const TermSetOptions& opt = {}) {
    if (n < 2) throw std::invalid_argument("ln_set: n must be >= 2");
    if (n > kMaxIndex) throw std::invalid_argument("ln_set: n too large");
    if (N == 0) throw std::invalid_argument("ln_set: N must be positive");
    if (n <= 4) {
        if (N > kCapSmallIndex) throw std::invalid_argument("ln_set: N exceeds the cap for n <= 4");
        return detail::small_index_set(n, N, opt);
    }
    if (N > kCapLargeIndex) throw std::invalid_argument("ln_set: N exceeds the cap");

    const Regions reg = regions(n, N);
    std::vector<detail::Hit> hits = detail::parallel_ranges(
        1, reg.a_box, opt.jobs, [&](std::int64_t lo, std::int64_t hi, std::vector<detail::Hit>& out) {
            detail::scan_box_strip(n, N, lo, hi, reg.b_box, out);
        });

    const auto cosines = detail::positive_cosines(n);
    auto tail = detail::parallel_ranges(
        reg.tail_start, reg.tail_quiet - 1, opt.jobs,
        [&](std::int64_t lo, std::int64_t hi, std::vector<detail::Hit>& out) {
            for (std::int64_t B = lo; B <= hi; ++B) detail::scan_positive_b(n, N, B, cosines, out);
        });
    hits.insert(hits.end(), tail.begin(), tail.end());

    // Past the quiet threshold at most the nearest integers can qualify; stop
    // at the first B where none does.
    std::int64_t B = reg.tail_quiet;
    while (detail::scan_positive_b(n, N, B, cosines, hits) > 0) ++B;

    TermSetResult out = detail::finish(n, N, hits, opt);
    out.upper_bound_value = thm22_upper(n, N).part_i;
    out.max_index = n;
    out.tail_end = B;
    return out;
}

/// Smallest m with phi^{m-2} / 2 > N: no real-case sequence reaches
/// |U_m| <= N from there on.
inline unsigned real_case_index_limit(std::uint64_t N) {
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    unsigned m = 2;
    long double v = 0.5L;
    while (v <= static_cast<long double>(N)) {
        v *= phi;
        ++m;
    }
    return m;
}

/// Union of L_m(N) over n <= m <= kMaxIndex. The ceiling is the same for
/// every n, so the result shrinks as n grows. It sits well above
/// max(real_case_index_limit(N), floor(3 log N)) for every admissible N.
inline TermSetResult ln_ge_set(unsigned n, std::uint64_t N, const TermSetOptions& opt = {}) {
    if (n < 2) throw std::invalid_argument("ln_ge_set: n must be >= 2");
    if (n > kMaxIndex) throw std::invalid_argument("ln_ge_set: n too large");
    if (N == 0) throw std::invalid_argument("ln_ge_set: N must be positive");
    TermSetOptions inner = opt;
    inner.keep_members = true;
    std::vector<detail::Hit> pool;
    for (unsigned m = n; m <= kMaxIndex; ++m) {
        const TermSetResult part = ln_set(m, N, inner);
        if (inner.keep_witnesses) {
            for (const auto& w : *part.witnesses) pool.push_back({w.value, w.params.A, w.params.B});
        } else {
            for (const auto v : *part.members) pool.push_back({v, 0, 0});
        }
    }
    // Merge keeping the witness from the smallest index that produced a value.
    std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    TermSetResult out;
    out.n = n;
    out.N = N;
    if (opt.keep_members) out.members.emplace();
    if (opt.keep_witnesses) out.witnesses.emplace();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i > 0 && pool[i].value == pool[i - 1].value) continue;
        ++out.count;
        if (out.members) out.members->push_back(pool[i].value);
        if (out.witnesses) out.witnesses->push_back({pool[i].value, {pool[i].A, pool[i].B}});
    }
    if (n >= 5) out.upper_bound_value = thm22_upper(n, N).part_ii;
    out.max_index = kMaxIndex;
    return out;
}

struct Density {
    std::uint64_t count = 0;
    std::uint64_t N = 1;
    double ratio() const { return static_cast<double>(count) / static_cast<double>(N); }
};

/// |L_n(N)| / N for n in {2, 3, 4}, as an exact fraction.
inline Density density_check(unsigned n, std::uint64_t N) {
    if (n < 2 || n > 4) throw std::invalid_argument("density_check: n must be 2, 3 or 4");
    if (N == 0 || N > kDensityCap) throw std::invalid_argument("density_check: N must lie in [1, 10^6]");
    return Density{ln_set(n, N).count, N};
}

struct RegressionPoint {
    std::uint64_t N = 0;
    std::uint64_t count = 0;
    double residual = 0;  // log count - fitted value
};

struct Regression {
    double slope = 0;
    double intercept = 0;
    std::vector<RegressionPoint> points;
};

/// Least-squares fit of log |L_n(N)| against log N.
inline Regression exponent_regression(unsigned n, const std::vector<std::uint64_t>& Ns, const TermSetOptions& opt = {}) {
    Regression out;
    for (const auto N : Ns) {
        const auto count = ln_set(n, N, TermSetOptions{false, false, opt.jobs}).count;
        if (count > 0) out.points.push_back({N, count, 0});
    }
    if (out.points.size() < 2) throw std::invalid_argument("exponent_regression: need at least two nonempty points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : out.points) {
        const double x = std::log(static_cast<double>(p.N));
        const double y = std::log(static_cast<double>(p.count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(out.points.size());
    const double var = sxx - sx * sx / k;
    if (var <= 1e-12) throw std::invalid_argument("exponent_regression: N values must not all coincide");
    out.slope = (sxy - sx * sy / k) / var;
    out.intercept = (sy - out.slope * sx) / k;
    for (auto& p : out.points) {
        p.residual = std::log(static_cast<double>(p.count)) - (out.intercept + out.slope * std::log(static_cast<double>(p.N)));
    }
    return out;
}

struct EmptinessReport {
    std::uint64_t pairs_checked = 0;
    std::vector<LucasParams> counterexamples;  // pairs with |F_n| <= N inside the region
    bool monotone_tail_certified = true;       // |F_n| increases past the scanned A range
};

/// A >= 9 N^{1/(n-1)}, |B| < 17 N^{2/(n-1)}. A is scanned explicitly up to twice
/// the region start; beyond 2 sqrt|B| the value |F_n(., B)| only grows.
inline EmptinessReport case2_scan(unsigned n, std::uint64_t N) {
    const Regions reg = regions(n, N);
    EmptinessReport rep;
    const std::int64_t a_lo = reg.a_box + 1;
    const std::int64_t a_hi = 2 * a_lo;
    for (std::int64_t B = -reg.b_box; B <= reg.b_box; ++B) {
        const i128 four_b = 4 * static_cast<i128>(B < 0 ? -B : B);
        if (static_cast<i128>(a_lo) * a_lo <= four_b) rep.monotone_tail_certified = false;
        for (std::int64_t A = a_lo; A <= a_hi; ++A) {
            ++rep.pairs_checked;
            if (abs_term_if_at_most({A, B}, n, N)) rep.counterexamples.push_back({A, B});
        }
    }
    return rep;
}

/// -4 * 17 N^{2/(n-1)} <= B <= -17 N^{2/(n-1)}, A >= 1. For B < 0,
/// |F_n(A, B)|^2 = prod (A^2 + 4|B| cos^2) (times A^2 for even n) grows with A.
inline EmptinessReport case3_scan(unsigned n, std::uint64_t N) {
    const Regions reg = regions(n, N);
    EmptinessReport rep;
    // largest |B| with |B|^{n-1} <= 68^{n-1} N^2
    const std::int64_t b_far = static_cast<std::int64_t>(numutil::integer_kth_root(
        BigInt(boost::multiprecision::pow(BigInt(68), n - 1) * BigInt(N) * N), n - 1));
    const std::int64_t a_hi = 2 * (reg.a_box + 1);
    for (std::int64_t nb = reg.b_box + 1; nb <= b_far; ++nb) {
        for (std::int64_t A = 1; A <= a_hi; ++A) {
            ++rep.pairs_checked;
            if (abs_term_if_at_most({A, -nb}, n, N)) rep.counterexamples.push_back({A, -nb});
        }
    }
    return rep;
}

}  // namespace lucas::term_sets
