// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include "lucas_atlas/census.hpp"
#include "lucas_atlas/growth.hpp"
#include "lucas_atlas/lucas_core.hpp"
#include "lucas_atlas/numutil.hpp"
#include "lucas_atlas/poly.hpp"
#include "lucas_atlas/term_sets.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>

using namespace lucas;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

unsigned worker_count() { return std::max(2u, std::thread::hardware_concurrency()); }

Verdict growth_sweep_sound() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = growth::growth_sweep(40, 40, 300);
    const double secs = seconds_since(t0);
    const bool ok = rep.violations == 0 && rep.remark_violations == 0 && secs <= 60.0;
    return {ok, fmt("%llu pairs, %llu checks, %llu violations, %llu floor violations, %.1f s (limit 60 s)",
                    (unsigned long long)rep.pairs, (unsigned long long)rep.checks, (unsigned long long)rep.violations,
                    (unsigned long long)rep.remark_violations, secs)};
}

Verdict census_sandwich() {
    unsigned bad = 0;
    double t100 = 0;
    for (std::int64_t t = 2; t <= 100; ++t) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto res = census::census(Rational::make(t, 1), worker_count());
        if (t == 100) t100 = seconds_since(t0);
        if (!res.sandwich_holds()) {
            ++bad;
            std::printf("    sandwich fails at t = %lld: %llu\n", (long long)t, (unsigned long long)res.exact_count);
        }
    }
    return {bad == 0 && t100 <= 120.0, fmt("t = 2..100, %u violations, t = 100 in %.3f s (limit 120 s)", bad, t100)};
}

Verdict census_oracle() {
    unsigned bad = 0, cases = 0;
    for (std::int64_t twice = 4; twice <= 24; ++twice) {
        const auto t = Rational::make(twice, 2);
        ++cases;
        if (census::census(t).exact_count != oracle::census_count(t)) ++bad;
    }
    return {bad == 0, fmt("%u values of t in [2, 12], %u mismatches", cases, bad)};
}

Verdict term_set_bounds() {
    unsigned bad = 0, cases = 0;
    for (unsigned n = 5; n <= 12; ++n)
        for (std::uint64_t N : {100ULL, 1000ULL, 10000ULL, 100000ULL}) {
            const auto bounds = term_sets::thm22_upper(n, N);
            const auto single = term_sets::ln_set(n, N, {false, false, worker_count()});
            const auto union_ = term_sets::ln_ge_set(n, N, {false, false, worker_count()});
            cases += 2;
            if (static_cast<double>(single.count) > bounds.part_i) ++bad;
            if (static_cast<double>(union_.count) > bounds.part_ii) ++bad;
            if (N == 100000) {
                std::printf("    n = %2u: |L_n| = %6llu <= %.3e, |L>=n| = %6llu <= %.3e\n", n,
                            (unsigned long long)single.count, bounds.part_i, (unsigned long long)union_.count,
                            bounds.part_ii);
            }
        }
    return {bad == 0, fmt("n = 5..12, N = 10^2..10^5: %u comparisons, %u violations", cases, bad)};
}

Verdict case_regions_empty() {
    std::uint64_t found = 0, checked = 0;
    bool certified = true;
    for (unsigned n = 5; n <= 7; ++n) {
        const auto c2 = term_sets::case2_scan(n, 10000);
        const auto c3 = term_sets::case3_scan(n, 10000);
        found += c2.counterexamples.size() + c3.counterexamples.size();
        checked += c2.pairs_checked + c3.pairs_checked;
        certified = certified && c2.monotone_tail_certified && c3.monotone_tail_certified;
    }
    return {found == 0 && certified, fmt("n = 5, 6, 7, N = 10^4: %llu pairs scanned, %llu counterexamples",
                                         (unsigned long long)checked, (unsigned long long)found)};
}

Verdict density() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto d2 = term_sets::density_check(2, 100000);
    const auto d3 = term_sets::density_check(3, 100000);
    const auto d4 = term_sets::density_check(4, 100000);
    const double secs = seconds_since(t0);
    const bool ok = d2.count == 100000 && d3.count == 100000 && d4.ratio() >= 0.74 && d4.ratio() <= 0.76 && secs <= 60;
    return {ok, fmt("N = 10^5: n=2 %llu/N, n=3 %llu/N, n=4 %llu/N = %.5f, %.2f s", (unsigned long long)d2.count,
                    (unsigned long long)d3.count, (unsigned long long)d4.count, d4.ratio(), secs)};
}

Verdict regression() {
    const std::vector<std::uint64_t> Ns{1000, 10000, 100000, 1000000};
    const auto seven = term_sets::exponent_regression(7, Ns, {false, false, worker_count()});
    const auto five = term_sets::exponent_regression(5, Ns, {false, false, worker_count()});
    for (const auto* fit : {&five, &seven})
        for (const auto& p : fit->points)
            std::printf("    N = %8llu: count %llu\n", (unsigned long long)p.N, (unsigned long long)p.count);
    const bool ok = std::abs(seven.slope - 0.5) <= 0.15 && std::abs(five.slope - 0.75) <= 0.15;
    return {ok, fmt("slope n=7: %.4f (target 0.5 +- 0.15), n=5: %.4f (target 0.75 +- 0.15)", seven.slope, five.slope)};
}

Verdict closed_forms() {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> coef(-100000, 100000);
    std::uniform_int_distribution<std::uint64_t> idx(0, 500);
    unsigned ring_bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const LucasParams p{coef(rng), coef(rng)};
        const auto n = idx(rng);
        if (term(p, n) != term_via_ring(p, n)) ++ring_bad;
    }
    ScopedPrecision prec(256);
    unsigned fact_bad = 0, fact_cases = 0;
    Real worst = 0;
    std::uniform_int_distribution<std::int64_t> small(-60, 60);
    for (unsigned n = 2; n <= 60; ++n)
        for (int i = 0; i < 60; ++i) {
            const LucasParams p{small(rng), small(rng)};
            const Real exact = to_real(term(p, n));
            const Real err = abs(poly::factored_value(n, p.A, p.B) - exact);
            ++fact_cases;
            if (exact != 0) {
                const Real rel = err / abs(exact);
                if (rel > worst) worst = rel;
                if (rel > Real("1e-20")) ++fact_bad;
            } else if (err > Real("1e-20") * poly::evaluation_scale(n, p.A, p.B)) {
                ++fact_bad;
            }
        }
    return {ring_bad == 0 && fact_bad == 0,
            fmt("10000 random ring checks, %u mismatches; %u factored checks, %u beyond 1e-20 (worst relative %s)",
                ring_bad, fact_cases, fact_bad, format_real(worst, 6).c_str())};
}

Verdict linear_forms() {
    ScopedPrecision prec(kVerificationPrecisionBits);
    std::mt19937_64 rng(9);
    std::vector<LucasParams> pairs;
    std::uniform_int_distribution<std::int64_t> small_b(2, 535), large_b(536, 1'000'000);
    while (pairs.size() < 200) {
        const std::int64_t B = pairs.size() % 2 ? large_b(rng) : small_b(rng);
        const auto a_lim = static_cast<std::int64_t>(std::sqrt(4.0 * B)) + 1;
        const std::int64_t A = std::uniform_int_distribution<std::int64_t>(-a_lim, a_lim)(rng);
        const LucasParams p{A, B};
        if (classify_kind(p) == SequenceKind::NonRealCase) pairs.push_back(p);
    }
    std::uint64_t bad = 0, checks = 0;
    Real tightest = 0;  // smallest log(|delta^l - 1|) - log(bound)
    bool first = true;
    for (const auto& p : pairs) {
        // delta = beta / alpha = (A^2 - 2B - i A sqrt(4B - A^2)) / (2B)
        const Real s = sqrt(Real(4 * p.B - p.A * p.A));
        const Real re = Real(p.A * p.A - 2 * p.B) / (2 * p.B);
        const Real im = -Real(p.A) * s / (2 * p.B);
        Real zr = 1, zi = 0;
        for (std::int64_t ell = 1; ell <= 10000; ++ell) {
            const Real nr = zr * re - zi * im;
            zi = zr * im + zi * re;
            zr = nr;
            const Real dist = sqrt((zr - 1) * (zr - 1) + zi * zi);
            const Real log_bound = growth::delta_power_minus_one_log_bound(p, ell);
            ++checks;
            if (dist < exp(log_bound)) ++bad;
            const Real margin = log(dist) - log_bound;
            if (first || margin < tightest) {
                tightest = margin;
                first = false;
            }
        }
    }
    return {bad == 0, fmt("200 pairs x 10^4 exponents at 512 bits: %llu checks, %llu violations, min log-margin %s",
                          (unsigned long long)checks, (unsigned long long)bad, format_real(tightest, 6).c_str())};
}

Verdict identities() {
    unsigned bad_sum = 0;
    for (unsigned n = 2; n <= 200; ++n)
        if (poly::fib_poly(n).abs_coefficient_sum() != numutil::fibonacci_number(n)) ++bad_sum;
    const auto coprime = numutil::coprime_pair_count(20);
    std::uint64_t bad_pell = 0;
    for (std::int64_t A = -1000; A <= 1000; ++A)
        for (std::int64_t B = -1000; B <= 1000; ++B) {
            const i128 a = A, b = B;
            const i128 x = 2 * b - 3 * a * a;
            const i128 lhs = x * x - 5 * a * a * a * a;
            const i128 u5 = a * a * a * a - 3 * a * a * b + b * b;  // F_5 coefficients
            const auto term5 = abs_term_if_at_most({A, B}, 5, ~std::uint64_t{0});
            const i128 signed_term = term5 ? (u5 < 0 ? -static_cast<i128>(*term5) : static_cast<i128>(*term5)) : 0;
            if (!term5 || lhs != 4 * u5 || signed_term != u5) ++bad_pell;
        }
    return {bad_sum == 0 && coprime >= 16000 && bad_pell == 0,
            fmt("coefficient sums n = 2..200: %u mismatches; coprime_pair_count(20) = %llu >= 16000; "
                "4F_5 identity on |A|, |B| <= 1000: %llu mismatches",
                bad_sum, (unsigned long long)coprime, (unsigned long long)bad_pell)};
}

Verdict degeneracy() {
    std::uint64_t bad = 0, cases = 0;
    for (std::int64_t A = -200; A <= 200; ++A)
        for (std::int64_t B = -200; B <= 200; ++B) {
            const LucasParams p{A, B};
            if (!is_valid(p)) continue;
            ++cases;
            if ((classify(p).kind == SequenceKind::Degenerate) != is_degenerate_oracle(p)) ++bad;
        }
    return {bad == 0, fmt("%llu valid pairs with |A|, |B| <= 200, %llu mismatches", (unsigned long long)cases,
                          (unsigned long long)bad)};
}

}  // namespace

int main() {
    ScopedPrecision precision(kDefaultPrecisionBits);
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"growth-bound soundness sweep", growth_sweep_sound},
        {"census sandwich", census_sandwich},
        {"census oracle equivalence", census_oracle},
        {"term-set upper bounds", term_set_bounds},
        {"case-region emptiness", case_regions_empty},
        {"small-index density", density},
        {"exponent regression", regression},
        {"closed-form equivalence", closed_forms},
        {"linear-form certification", linear_forms},
        {"coefficient, coprime and Pell identities", identities},
        {"degeneracy equivalence", degeneracy},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) ++failures;
        std::printf("%s [%zu] %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
