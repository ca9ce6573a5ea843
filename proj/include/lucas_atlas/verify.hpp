#pragma once

// Self-check suite run by `lucas_atlas verify`: small exhaustive versions of
// the library's invariants, each reported as a named pass/fail line.

#include "census.hpp"
#include "growth.hpp"
#include "lucas_core.hpp"
#include "numeric.hpp"
#include "numutil.hpp"
#include "pell.hpp"
#include "poly.hpp"
#include "term_sets.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace lucas::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline Check term_routes_agree() {
    std::uint64_t mismatches = 0, cases = 0;
    for (std::int64_t A = -12; A <= 12; ++A)
        for (std::int64_t B = -12; B <= 12; ++B)
            for (std::uint64_t n = 0; n <= 130; n += 7) {
                ++cases;
                if (term({A, B}, n) != term_via_ring({A, B}, n)) ++mismatches;
                if (abs(term({A, B}, n)) != abs(term({-A, B}, n))) ++mismatches;
            }
    return {"term_routes_agree", mismatches == 0, std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

inline Check degeneracy_matches_oracle() {
    std::uint64_t mismatches = 0, cases = 0;
    for (std::int64_t A = -60; A <= 60; ++A)
        for (std::int64_t B = -60; B <= 60; ++B) {
            const LucasParams p{A, B};
            if (!is_valid(p)) continue;
            ++cases;
            if ((classify_kind(p) == SequenceKind::Degenerate) != is_degenerate_oracle(p)) ++mismatches;
        }
    return {"degeneracy_matches_oracle", mismatches == 0, std::to_string(cases) + " valid pairs"};
}

inline Check coefficient_sum_is_fibonacci() {
    unsigned bad = 0;
    for (unsigned n = 2; n <= 200; ++n) {
        if (poly::fib_poly(n).abs_coefficient_sum() != numutil::fibonacci_number(n)) ++bad;
    }
    return {"coefficient_sum_is_fibonacci", bad == 0, "n = 2..200"};
}

inline Check polynomial_evaluation() {
    unsigned bad = 0;
    for (unsigned n = 1; n <= 30; ++n) {
        const auto f = poly::fib_poly(n);
        for (std::int64_t A = -10; A <= 10; ++A)
            for (std::int64_t B = -10; B <= 10; ++B)
                if (f.evaluate(A, B) != term({A, B}, n)) ++bad;
        if (n >= 5) {
            const auto g = poly::associated_form(n);
            for (std::int64_t A = -6; A <= 6; ++A)
                for (std::int64_t B = -6; B <= 6; ++B) {
                    const BigInt lhs = g.evaluate(BigInt(A) * A, B) * (n % 2 == 0 ? BigInt(A) : BigInt(1));
                    if (lhs != f.evaluate(A, B)) ++bad;
                }
        }
    }
    return {"polynomial_evaluation", bad == 0, "n <= 30, |A|, |B| <= 10"};
}

inline Check quintic_pell_identity() {
    unsigned bad = 0;
    for (std::int64_t A = 1; A <= 30; ++A)
        for (std::int64_t B = 1; B <= 900; ++B) {
            const BigInt x = 2 * BigInt(B) - 3 * BigInt(A) * A;
            const BigInt y = BigInt(A) * A;
            if (x * x - 5 * y * y != 4 * term({A, B}, 5)) ++bad;
        }
    return {"quintic_pell_identity", bad == 0, "1 <= A <= 30, 1 <= B <= 900"};
}

inline Check growth_bounds_hold() {
    const auto rep = growth::growth_sweep(10, 10, 100);
    return {"growth_bounds_hold", rep.violations == 0 && rep.remark_violations == 0,
            std::to_string(rep.checks) + " checks, " + std::to_string(rep.violations) + " violations"};
}

inline Check delta_bound_holds() {
    ScopedPrecision prec(kVerificationPrecisionBits);
    unsigned bad = 0;
    for (const LucasParams p : {LucasParams{1, 2}, LucasParams{3, 7}, LucasParams{2, 600}, LucasParams{-5, 11}}) {
        for (std::int64_t ell = 1; ell <= 300; ++ell) {
            if (growth::ratio_power_distance(p, static_cast<std::uint64_t>(ell)) < growth::delta_power_minus_one_bound(p, ell)) ++bad;
        }
    }
    return {"delta_bound_holds", bad == 0, "4 pairs, 1 <= ell <= 300"};
}

inline Check small_ratio_indices_dip() {
    unsigned bad = 0;
    const Real two_pi = 2 * real_pi();
    for (const LucasParams p : {LucasParams{1, 2}, LucasParams{1, 3}, LucasParams{3, 5}}) {
        const auto r = growth::small_ratio_indices(p, 6);
        for (const auto q : r.indices)
            if (growth::ratio_power_distance(p, q) * q > two_pi) ++bad;
    }
    return {"small_ratio_indices_dip", bad == 0, "3 pairs, 6 convergents each"};
}

inline Check census_sandwich() {
    unsigned bad = 0;
    for (std::int64_t twice = 4; twice <= 60; ++twice) {
        if (!census::census(Rational::make(twice, 2)).sandwich_holds()) ++bad;
    }
    for (std::int64_t t = 2; t <= 8; ++t) {
        const Rational r = Rational::make(t, 1);
        if (census::census(r).exact_count != census::census_oracle(r)) ++bad;
    }
    return {"census_sandwich", bad == 0, "t = 2, 2.5, ..., 30; oracle for t <= 8"};
}

inline Check term_set_witnesses() {
    unsigned bad = 0;
    for (unsigned n = 2; n <= 8; ++n) {
        const auto r = term_sets::ln_set(n, 1000, {true, true, 1});
        for (const auto& w : *r.witnesses) {
            if (!is_nondegenerate(w.params) || abs(term(w.params, n)) != w.value || w.value == 0 || w.value > 1000) ++bad;
        }
        if (n >= 5 && static_cast<double>(r.count) > *r.upper_bound_value) ++bad;
    }
    return {"term_set_witnesses", bad == 0, "n = 2..8, N = 1000"};
}

inline Check term_set_unions() {
    const auto a = term_sets::ln_ge_set(5, 300, {true, false, 1});
    const auto b = term_sets::ln_ge_set(6, 300, {true, false, 1});
    const std::set<std::uint64_t> big(a.members->begin(), a.members->end());
    bool ok = static_cast<double>(a.count) <= *a.upper_bound_value;
    for (const auto v : *b.members) ok = ok && big.count(v) > 0;
    return {"term_set_unions", ok, "L>=6(300) within L>=5(300)"};
}

inline Check case_regions_empty() {
    std::uint64_t found = 0, checked = 0;
    for (unsigned n = 5; n <= 7; ++n) {
        for (const auto& rep : {term_sets::case2_scan(n, 1000), term_sets::case3_scan(n, 1000)}) {
            found += rep.counterexamples.size();
            checked += rep.pairs_checked;
            if (!rep.monotone_tail_certified) ++found;
        }
    }
    return {"case_regions_empty", found == 0, std::to_string(checked) + " pairs, n = 5..7, N = 1000"};
}

inline Check small_index_density() {
    const bool ok = term_sets::density_check(2, 1000).count == 1000 && term_sets::density_check(3, 1000).count == 1000;
    return {"small_index_density", ok, "n = 2, 3 at N = 1000"};
}

inline Check pell_families_cover() {
    const std::int64_t t = 4;
    const auto box = pell::pell_solve_box(t, 10'000);
    std::set<BigInt> reached;
    bool ok = true;
    for (const auto& seed : box.families) {
        for (const auto& y : pell::pell_family_extend(t, seed, 8)) {
            ok = ok && pell::on_conic(t, y);
            reached.insert(abs(y));
        }
    }
    for (const auto& s : box.solutions) ok = ok && norm(s) == t && reached.count(BigInt(s.y)) > 0;
    return {"pell_families_cover", ok, std::to_string(box.solutions.size()) + " solutions with y <= 10^4"};
}

inline Check arithmetic_utilities() {
    bool ok = numutil::tau(720) == 30 && numutil::tau(1) == 1 && numutil::coprime_pair_count(20) >= 16000;
    for (std::uint64_t k = 3; k <= 5000; ++k) ok = ok && numutil::tau_bound_check(k);
    for (std::uint64_t x = 0; x <= 3000; x += 7)
        for (unsigned k = 1; k <= 5; ++k) {
            const auto r = numutil::integer_kth_root(x, k);
            ok = ok && BigInt(boost::multiprecision::pow(BigInt(r), k)) <= x &&
                 BigInt(boost::multiprecision::pow(BigInt(r + 1), k)) > x;
        }
    return {"arithmetic_utilities", ok, "tau, tau bound k <= 5000, k-th roots"};
}

}  // namespace detail

inline std::vector<Check> run_all() {
    const std::vector<std::function<Check()>> suite{
        detail::term_routes_agree,    detail::degeneracy_matches_oracle, detail::coefficient_sum_is_fibonacci,
        detail::polynomial_evaluation, detail::quintic_pell_identity,    detail::growth_bounds_hold,
        detail::delta_bound_holds,     detail::small_ratio_indices_dip,  detail::census_sandwich,
        detail::term_set_witnesses,    detail::term_set_unions,          detail::case_regions_empty,
        detail::small_index_density,   detail::pell_families_cover,      detail::arithmetic_utilities,
    };
    std::vector<Check> out;
    for (const auto& check : suite) {
        try {
            out.push_back(check());
        } catch (const std::exception& e) {
            out.push_back({"exception", false, e.what()});
        }
    }
    return out;
}

}  // namespace lucas::verify
