#pragma once

// Command-line front end. Every subcommand builds a Report that is written as
// JSON (default) or CSV. Exit codes: 0 ok, 1 a check failed, 2 bad arguments.

#include "census.hpp"
#include "growth.hpp"
#include "lucas_core.hpp"
#include "numeric.hpp"
#include "pell.hpp"
#include "term_sets.hpp"
#include "verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lucas::cli {

inline constexpr std::string_view kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::string command;
    Json params = Json::object();
    Json results = Json::object();
    Table table;
    int exit_code = 0;
};

inline std::string str(const BigInt& v) { return v.str(); }
inline std::string str(std::int64_t v) { return std::to_string(v); }
inline std::string str(std::uint64_t v) { return std::to_string(v); }
inline std::string str(unsigned v) { return std::to_string(v); }
inline std::string str(bool v) { return v ? "true" : "false"; }

inline std::string str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline void write_csv(const Table& t, std::ostream& out) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

struct Options {
    std::string emit = "json";
    unsigned prec = 0;  // 0: environment or default
    unsigned jobs = 1;
};

namespace detail {

inline Json witness_json(const term_sets::TermWitness& w) {
    return Json{{"value", str(w.value)}, {"A", str(w.params.A)}, {"B", str(w.params.B)}};
}

inline void term_set_report(Report& r, const term_sets::TermSetResult& res, bool members, bool witnesses) {
    r.results["count"] = str(res.count);
    if (res.upper_bound_value) r.results["upper_bound"] = str(*res.upper_bound_value);
    if (res.max_index) r.results["max_index"] = str(res.max_index);
    r.table.header = {"n", "N", "count", "upper_bound"};
    r.table.rows.push_back({str(res.n), str(res.N), str(res.count),
                            res.upper_bound_value ? str(*res.upper_bound_value) : std::string{}});
    if (members && res.members) {
        Json list = Json::array();
        for (const auto v : *res.members) list.push_back(str(v));
        r.results["members"] = std::move(list);
        r.table = Table{{"value"}, {}};
        for (const auto v : *res.members) r.table.rows.push_back({str(v)});
    }
    if (witnesses && res.witnesses) {
        Json list = Json::array();
        for (const auto& w : *res.witnesses) list.push_back(witness_json(w));
        r.results["witnesses"] = std::move(list);
        r.table = Table{{"value", "A", "B"}, {}};
        for (const auto& w : *res.witnesses) r.table.rows.push_back({str(w.value), str(w.params.A), str(w.params.B)});
    }
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on Lucas sequences", "lucas_atlas"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opt;
    app.add_option("--emit", opt.emit, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--prec", opt.prec, "Working precision in bits (default 256, or LUCAS_ATLAS_PREC)")
        ->check(CLI::Range(32u, 1u << 20));
    app.add_option("--jobs", opt.jobs, "Worker threads for census and term-set scans")->check(CLI::Range(1u, 256u));

    std::int64_t A = 0, B = 0, ell = 1, t_int = 0;
    std::uint64_t n = 2, N = 1, ymax = 1, a_max = 0, b_max = 0, n_max = 2;
    std::string t_text;
    std::vector<std::uint64_t> Ns;
    bool oracle = false, members = false, witnesses = false;

    auto* term_cmd = app.add_subcommand("term", "U_n for parameters (A, B)");
    term_cmd->add_option("--A", A)->required();
    term_cmd->add_option("--B", B)->required();
    term_cmd->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{10'000'000}));

    auto* classify_cmd = app.add_subcommand("classify", "Kind, discriminant and dominant root of (A, B)");
    classify_cmd->add_option("--A", A)->required();
    classify_cmd->add_option("--B", B)->required();

    auto* census_cmd = app.add_subcommand("census", "Count sequences with |alpha| <= t");
    census_cmd->add_option("--t", t_text, "Integer, decimal or p/q")->required();
    census_cmd->add_flag("--oracle", oracle, "Cross-check against the naive scan");

    auto* ln_cmd = app.add_subcommand("ln-set", "Values |U_n| <= N");
    auto* ln_ge_cmd = app.add_subcommand("ln-ge-set", "Values |U_m| <= N over m >= n");
    for (auto* c : {ln_cmd, ln_ge_cmd}) {
        c->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{term_sets::kMaxIndex}));
        c->add_option("--N", N)->required()->check(CLI::PositiveNumber);
        c->add_flag("--members", members, "List the values");
        c->add_flag("--witnesses", witnesses, "List one (A, B) per value");
    }

    auto* growth_cmd = app.add_subcommand("growth-check", "Sweep |U_n| against the growth lower bounds");
    growth_cmd->add_option("--Amax", a_max)->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{200}));
    growth_cmd->add_option("--Bmax", b_max)->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{200}));
    growth_cmd->add_option("--nmax", n_max)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{5000}));

    auto* laurent_cmd = app.add_subcommand("laurent", "Lower bound for |(beta/alpha)^ell - 1|");
    laurent_cmd->add_option("--A", A)->required();
    laurent_cmd->add_option("--B", B)->required();
    laurent_cmd->add_option("--ell", ell)->required();

    auto* pell_cmd = app.add_subcommand("pell", "Solutions of x^2 - 5y^2 = t with y <= ymax");
    pell_cmd->add_option("--t", t_int)->required();
    pell_cmd->add_option("--ymax", ymax)->required();

    auto* density_cmd = app.add_subcommand("density", "|L_n(N)| / N for n in {2, 3, 4}");
    density_cmd->add_option("--n", n)->required();
    density_cmd->add_option("--N", N)->required();

    auto* regress_cmd = app.add_subcommand("regress", "Slope of log |L_n(N)| against log N");
    regress_cmd->add_option("--n", n)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{term_sets::kMaxIndex}));
    regress_cmd->add_option("--Ns", Ns, "Comma-separated list")->required()->delimiter(',');

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    unsigned bits = 0;
    try {
        bits = opt.prec ? opt.prec : precision_from_env();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    ScopedPrecision precision(bits);

    Report r;
    try {
        if (term_cmd->parsed()) {
            r.command = "term";
            r.params = {{"A", str(A)}, {"B", str(B)}, {"n", str(n)}};
            const BigInt v = term({A, B}, n);
            r.results = {{"value", str(v)}, {"kind", std::string(to_string(classify_kind({A, B})))}};
            r.table = {{"A", "B", "n", "value"}, {{str(A), str(B), str(n), str(v)}}};
        } else if (classify_cmd->parsed()) {
            r.command = "classify";
            r.params = {{"A", str(A)}, {"B", str(B)}};
            const auto c = classify({A, B});
            const std::string kind(to_string(c.kind));
            const std::string root = format_real(c.dominant_root_abs);
            r.results = {{"kind", kind},
                         {"discriminant", str(c.discriminant)},
                         {"dominant_root_abs", root},
                         {"nondegenerate", is_nondegenerate({A, B})}};
            r.table = {{"A", "B", "kind", "discriminant", "dominant_root_abs"},
                       {{str(A), str(B), kind, str(c.discriminant), root}}};
        } else if (census_cmd->parsed()) {
            r.command = "census";
            const Rational t = Rational::parse(t_text);
            r.params = {{"t", t_text}, {"oracle", oracle}, {"jobs", str(opt.jobs)}};
            const auto res = census::census(t, opt.jobs);
            const std::string t_exact = str(t.num) + (t.den == 1 ? "" : "/" + str(t.den));
            r.results = {{"t", t_exact},
                         {"exact_count", str(res.exact_count)},
                         {"lower_formula", res.lower_formula.to_decimal_string()},
                         {"upper_formula", res.upper_formula.to_decimal_string()},
                         {"breakdown",
                          {{"non_real", str(res.breakdown.non_real)},
                           {"real_pos_b", str(res.breakdown.real_pos_b)},
                           {"real_neg_b", str(res.breakdown.real_neg_b)}}},
                         {"sandwich_holds", res.sandwich_holds()}};
            r.table = {{"t", "exact_count", "lower_formula", "upper_formula", "sandwich_holds"},
                       {{t_exact, str(res.exact_count), res.lower_formula.to_decimal_string(),
                         res.upper_formula.to_decimal_string(), str(res.sandwich_holds())}}};
            bool ok = res.sandwich_holds();
            if (oracle) {
                const auto naive = census::census_oracle(t);
                r.results["oracle_count"] = str(naive);
                r.results["oracle_matches"] = naive == res.exact_count;
                r.table.header.push_back("oracle_count");
                r.table.rows[0].push_back(str(naive));
                ok = ok && naive == res.exact_count;
            }
            r.exit_code = ok ? 0 : 1;
        } else if (ln_cmd->parsed() || ln_ge_cmd->parsed()) {
            const bool ge = ln_ge_cmd->parsed();
            r.command = ge ? "ln-ge-set" : "ln-set";
            r.params = {{"n", str(n)}, {"N", str(N)}, {"members", members}, {"witnesses", witnesses}, {"jobs", str(opt.jobs)}};
            const term_sets::TermSetOptions o{members, witnesses, opt.jobs};
            const auto nn = static_cast<unsigned>(n);
            const auto res = ge ? term_sets::ln_ge_set(nn, N, o) : term_sets::ln_set(nn, N, o);
            detail::term_set_report(r, res, members, witnesses);
        } else if (growth_cmd->parsed()) {
            r.command = "growth-check";
            r.params = {{"Amax", str(a_max)}, {"Bmax", str(b_max)}, {"nmax", str(n_max)}};
            const auto rep = growth::growth_sweep(static_cast<std::int64_t>(a_max), static_cast<std::int64_t>(b_max), n_max);
            Json failures = Json::array();
            for (const auto& [p, idx] : rep.first_failures) failures.push_back({{"A", str(p.A)}, {"B", str(p.B)}, {"n", str(idx)}});
            r.results = {{"pairs", str(rep.pairs)},
                         {"checks", str(rep.checks)},
                         {"violations", str(rep.violations)},
                         {"remark_violations", str(rep.remark_violations)},
                         {"first_failures", std::move(failures)}};
            r.table = {{"pairs", "checks", "violations", "remark_violations"},
                       {{str(rep.pairs), str(rep.checks), str(rep.violations), str(rep.remark_violations)}}};
            r.exit_code = (rep.violations == 0 && rep.remark_violations == 0) ? 0 : 1;
        } else if (laurent_cmd->parsed()) {
            r.command = "laurent";
            r.params = {{"A", str(A)}, {"B", str(B)}, {"ell", str(ell)}};
            const LucasParams p{A, B};
            const Real log_bound = growth::delta_power_minus_one_log_bound(p, ell);
            const Real distance = growth::ratio_power_distance(p, static_cast<std::uint64_t>(ell < 0 ? -ell : ell));
            const bool holds = distance >= exp(log_bound);
            const std::string height = p.B <= growth::kSmallBMax ? "pi" : "log(B)/2";
            r.results = {{"log_A_delta", format_real(growth::delta_log_height_majorant(p))},
                         {"log_A_delta_branch", height},
                         {"bound", format_real(exp(log_bound))},
                         {"log_bound", format_real(log_bound)},
                         {"distance", format_real(distance)},
                         {"holds", holds}};
            r.table = {{"A", "B", "ell", "bound", "log_bound", "distance", "holds"},
                       {{str(A), str(B), str(ell), format_real(exp(log_bound)), format_real(log_bound),
                         format_real(distance), str(holds)}}};
            r.exit_code = holds ? 0 : 1;
        } else if (pell_cmd->parsed()) {
            r.command = "pell";
            r.params = {{"t", str(t_int)}, {"ymax", str(ymax)}};
            const auto res = pell::pell_solve_box(t_int, ymax);
            Json sols = Json::array(), fams = Json::array();
            r.table.header = {"x", "y"};
            for (const auto& s : res.solutions) {
                sols.push_back({{"x", str(s.x)}, {"y", str(s.y)}});
                r.table.rows.push_back({str(s.x), str(s.y)});
            }
            for (const auto& f : res.families) fams.push_back({{"u", str(f.x)}, {"v", str(f.y)}});
            r.results = {{"count", str(static_cast<std::uint64_t>(res.solutions.size()))},
                         {"solutions", std::move(sols)},
                         {"families", std::move(fams)}};
        } else if (density_cmd->parsed()) {
            r.command = "density";
            r.params = {{"n", str(n)}, {"N", str(N)}};
            if (n < 2 || n > 4) throw std::invalid_argument("density: n must be 2, 3 or 4");
            const auto d = term_sets::density_check(static_cast<unsigned>(n), N);
            const Rational ratio = Rational::make(BigInt(d.count), BigInt(d.N));
            const std::string exact = str(ratio.num) + (ratio.den == 1 ? "" : "/" + str(ratio.den));
            r.results = {{"count", str(d.count)}, {"ratio", exact}, {"ratio_decimal", ratio.to_decimal_string()}};
            r.table = {{"n", "N", "count", "ratio"}, {{str(n), str(N), str(d.count), exact}}};
        } else if (regress_cmd->parsed()) {
            r.command = "regress";
            Json ns = Json::array();
            for (const auto v : Ns) ns.push_back(str(v));
            r.params = {{"n", str(n)}, {"Ns", std::move(ns)}, {"jobs", str(opt.jobs)}};
            const auto fit = term_sets::exponent_regression(static_cast<unsigned>(n), Ns, {false, false, opt.jobs});
            Json pts = Json::array();
            r.table.header = {"N", "count", "residual", "slope", "intercept"};
            for (const auto& p : fit.points) {
                pts.push_back({{"N", str(p.N)}, {"count", str(p.count)}, {"residual", str(p.residual)}});
                r.table.rows.push_back({str(p.N), str(p.count), str(p.residual), str(fit.slope), str(fit.intercept)});
            }
            r.results = {{"slope", str(fit.slope)}, {"intercept", str(fit.intercept)}, {"points", std::move(pts)}};
        } else if (verify_cmd->parsed()) {
            r.command = "verify";
            const auto checks = verify::run_all();
            Json list = Json::array();
            bool all = true;
            r.table.header = {"check", "passed", "detail"};
            for (const auto& c : checks) {
                list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                r.table.rows.push_back({c.name, str(c.passed), c.detail});
                all = all && c.passed;
            }
            r.results = {{"passed", all}, {"checks", std::move(list)}};
            r.exit_code = all ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    if (opt.emit == "csv") {
        write_csv(r.table, out);
    } else {
        Json doc = {{"command", r.command},
                    {"params", r.params},
                    {"results", r.results},
                    {"meta",
                     {{"version", std::string(kVersion)},
                      {"precision_bits", bits},
                      {"wall_time_ms", static_cast<std::int64_t>(elapsed)}}}};
        out << doc.dump(2) << '\n';
    }
    return r.exit_code;
}

}  // namespace lucas::cli
