// Command-line front end: coefficient computation, conditioning diagnostics,
// spectral differentiation, derivative rootfinding, and canned experiment
// reproductions, all emitted as deterministic CSV or JSON.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cheb/conditioning.hpp"
#include "cheb/contour.hpp"
#include "cheb/errors.hpp"
#include "cheb/expr.hpp"
#include "cheb/format.hpp"
#include "cheb/functions.hpp"
#include "cheb/roots.hpp"
#include "cheb/series.hpp"
#include "cheb/strategy.hpp"

namespace {

using cheb::AnalyticFn;
using cheb::format_double;
using cheb::format_int;

constexpr double kMachineEps = 2.220446049250313e-16;

int env_threads() {
    const char* s = std::getenv("CHEB_THREADS");
    if (!s)
        return 1;
    const int v = std::atoi(s);
    return v <= 0 ? 1 : v;
}

// ---------------------------------------------------------------------------
// table emission

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
};

bool looks_numeric(const std::string& s) {
    if (s.empty() || s == "inf" || s == "-inf" || s == "nan")
        return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

void write_csv(const Table& t, std::ostream& os) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

void write_json(const Table& t, std::ostream& os) {
    os << "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "  {";
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            os << (i ? "," : "") << "\"" << t.columns[i] << "\":";
            const std::string& cell = t.rows[r][i];
            if (looks_numeric(cell))
                os << cell;
            else
                os << "\"" << cell << "\"";
        }
        os << (r + 1 < t.rows.size() ? "},\n" : "}\n");
    }
    os << "]\n";
}

void emit(const Table& t, const std::string& format, const std::string& out_path) {
    std::ostringstream buf;
    if (format == "json")
        write_json(t, buf);
    else
        write_csv(t, buf);
    if (out_path.empty()) {
        std::cout << buf.str();
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw cheb::evaluation_error("cannot open output file '" + out_path + "'");
    file << buf.str();
}

// ---------------------------------------------------------------------------
// shared options

struct FunctionOptions {
    std::string name;
    std::vector<double> params;
    std::string expr;
    double rho_max = 0.0; // 0 = unset
    bool rule_auto = false;
};

struct StrategyOptions {
    std::string strategy = "fixed";
    double rho = 1.0;
    int m = 0;
    double eps = 1e-14;
    std::string kind = "T";
};

void add_function_options(CLI::App* cmd, FunctionOptions& fo) {
    cmd->add_option("--fn", fo.name,
                    "registry function: exp, cos, cos_affine, pole, rational_runge, "
                    "rational4, branch, exp2cos, poly");
    cmd->add_option("--param", fo.params, "registry function parameters")->delimiter(',');
    cmd->add_option("--expr", fo.expr,
                    "expression in x; grammar: expr = term {('+'|'-') term}; "
                    "term = unary {('*'|'/') unary}; unary = '-' unary | power; "
                    "power = atom ['^' unary]; atom = number | 'x' | 'pi' | 'e' | "
                    "fn '(' expr ')' | '(' expr ')'; fn in {exp,sin,cos,sqrt,log}");
    cmd->add_option("--rho-max", fo.rho_max, "analyticity bound for --expr functions");
    cmd->add_flag("--radius-rule-auto,--auto-rule", fo.rule_auto,
                  "use the numeric radius optimizer for --expr functions");
}

void add_strategy_options(CLI::App* cmd, StrategyOptions& so) {
    cmd->add_option("--strategy", so.strategy, "fixed | optimal | auto")
        ->check(CLI::IsMember({"fixed", "optimal", "auto"}));
    cmd->add_option("--rho", so.rho, "contour radius for the fixed strategy");
    cmd->add_option("--m", so.m, "trapezoidal node count (0 = per-coefficient heuristic)");
    cmd->add_option("--eps", so.eps, "accuracy target for the node heuristic");
    cmd->add_option("--kind", so.kind, "coefficient kind: T | U")
        ->check(CLI::IsMember({"T", "U"}));
}

AnalyticFn resolve_function(const FunctionOptions& fo) {
    const bool has_name = !fo.name.empty();
    const bool has_expr = !fo.expr.empty();
    if (has_name == has_expr)
        throw cheb::precondition_error("exactly one of --fn and --expr is required");
    if (has_name)
        return cheb::registry_lookup(fo.name, fo.params);
    if (!(fo.rho_max > 1.0) && !fo.rule_auto)
        throw cheb::precondition_error(
            "--expr functions require --rho-max or --radius-rule-auto");
    const cheb::ExprAst ast = cheb::parse_expr(fo.expr);
    const double rho_max =
        fo.rho_max > 1.0 ? fo.rho_max : std::numeric_limits<double>::infinity();
    // Singularity structure is unknown for user expressions, so the numeric
    // optimizer is the only per-coefficient rule on offer.
    return cheb::make_expr_fn(ast, rho_max, cheb::AutoRadius{rho_max});
}

cheb::SweepConfig make_sweep_config(const StrategyOptions& so) {
    cheb::SweepConfig cfg;
    if (so.strategy == "fixed")
        cfg.strategy = cheb::Strategy::Fixed;
    else if (so.strategy == "optimal")
        cfg.strategy = cheb::Strategy::Optimal;
    else
        cfg.strategy = cheb::Strategy::Auto;
    cfg.kind = so.kind == "U" ? cheb::Kind::SecondKind : cheb::Kind::FirstKind;
    cfg.rho = so.rho;
    cfg.m = so.m;
    cfg.eps = so.eps;
    cfg.threads = env_threads();
    return cfg;
}

// Best-available reference coefficient: the oracle when there is one, else a
// high-node self-consistency run at the function's own optimal radius.
double reference_coeff(const AnalyticFn& fn, int n, cheb::Kind kind) {
    if (fn.has_coeff_oracle()) {
        if (kind == cheb::Kind::FirstKind)
            return fn.coeff_oracle(n);
        return 0.5 * (fn.coeff_oracle(n) - fn.coeff_oracle(n + 2));
    }
    const double rho = cheb::optimal_radius(fn, n);
    const int m = std::max(cheb::nodes_estimate(n, 1e-15, fn.node_class), n + 3);
    const cheb::ContourPlan plan{rho, m};
    return kind == cheb::Kind::FirstKind ? cheb::coeff_t(fn, n, plan).value.real()
                                         : cheb::coeff_u(fn, n, plan).value.real();
}

// ---------------------------------------------------------------------------
// coeffs

struct CoeffsArgs {
    FunctionOptions fo;
    StrategyOptions so;
    int N = 0;
    std::string format = "csv";
    std::string out;
};

void run_coeffs(const CoeffsArgs& args) {
    const AnalyticFn fn = resolve_function(args.fo);
    const cheb::SweepConfig cfg = make_sweep_config(args.so);
    const auto coeffs = cheb::coeff_sweep(fn, args.N, cfg);
    const bool with_ref = fn.has_coeff_oracle();

    Table t;
    t.columns = {"n", "rho", "m", "coeff", "imag_diag"};
    if (with_ref) {
        t.columns.push_back("ref");
        t.columns.push_back("rel_err");
        t.columns.push_back("norm_abs_err");
    }
    for (const auto& c : coeffs) {
        if (c.imag_diagnostic > 1e-10)
            std::cerr << "warning: imaginary residue " << format_double(c.imag_diagnostic)
                      << " at n = " << c.n << "\n";
        std::vector<std::string> row = {format_int(c.n), format_double(c.plan.rho),
                                        format_int(c.plan.m), format_double(c.value.real()),
                                        format_double(c.imag_diagnostic)};
        if (with_ref) {
            const double ref = reference_coeff(fn, c.n, cfg.kind);
            const double err = std::abs(c.value.real() - ref);
            row.push_back(format_double(ref));
            row.push_back(format_double(ref != 0.0
                                            ? err / std::abs(ref)
                                            : std::numeric_limits<double>::infinity()));
            row.push_back(format_double(std::pow(c.plan.rho, c.n) * err));
        }
        t.add_row(std::move(row));
    }
    emit(t, args.format, args.out);
}

// ---------------------------------------------------------------------------
// cond

struct CondArgs {
    FunctionOptions fo;
    std::vector<int> n_list;
    std::string rho_grid = "1:2:10"; // lo:hi:count
    int m = 0;                       // measurement node count; 0 = heuristic
    double eps = 1e-14;
    std::string kind = "T";
    std::string format = "csv";
    std::string out;
};

std::vector<double> parse_grid(const std::string& spec) {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    is >> lo >> c1 >> hi >> c2 >> count;
    if (!is || c1 != ':' || c2 != ':' || count < 2 || !(hi > lo))
        throw cheb::precondition_error("--rho-grid expects lo:hi:count with hi > lo, count >= 2");
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return grid;
}

void run_cond(const CondArgs& args) {
    const AnalyticFn fn = resolve_function(args.fo);
    if (args.n_list.empty())
        throw cheb::precondition_error("cond requires --n with at least one index");
    const cheb::Kind kind = args.kind == "U" ? cheb::Kind::SecondKind : cheb::Kind::FirstKind;
    const auto grid = parse_grid(args.rho_grid);
    const bool with_err = fn.has_coeff_oracle();

    Table t;
    t.columns = {"n", "rho", "m_rho", "kappa"};
    if (with_err)
        t.columns.push_back("err_ratio");
    for (int n : args.n_list) {
        const double ref = reference_coeff(fn, n, kind);
        const int m = std::max(args.m > 0 ? args.m
                                          : cheb::nodes_estimate(n, args.eps, fn.node_class),
                               n + 3);
        for (double rho : grid) {
            if (!(rho >= 1.0) || !(rho < fn.rho_max))
                continue;
            const cheb::ConditionEstimate est = kind == cheb::Kind::FirstKind
                                                    ? cheb::kappa_t(fn, n, rho, ref)
                                                    : cheb::kappa_u(fn, n, rho, ref);
            std::vector<std::string> row = {format_int(n), format_double(rho),
                                            format_double(est.m_rho),
                                            format_double(est.kappa)};
            if (with_err) {
                const cheb::ContourPlan plan{rho, m};
                const double got = kind == cheb::Kind::FirstKind
                                       ? cheb::coeff_t(fn, n, plan).value.real()
                                       : cheb::coeff_u(fn, n, plan).value.real();
                const double rel =
                    ref != 0.0 ? std::abs(got - ref) / std::abs(ref)
                               : std::numeric_limits<double>::infinity();
                row.push_back(format_double(rel / kMachineEps));
            }
            t.add_row(std::move(row));
        }
    }
    emit(t, args.format, args.out);
}

// ---------------------------------------------------------------------------
// diff

struct DiffArgs {
    FunctionOptions fo;
    StrategyOptions so;
    int N = 100;
    std::vector<int> s_list;
    int points = 100;
    std::string format = "csv";
    std::string out;
};

void run_diff(const DiffArgs& args) {
    const AnalyticFn fn = resolve_function(args.fo);
    if (args.s_list.empty())
        throw cheb::precondition_error("diff requires --s with at least one order");
    cheb::SweepConfig cfg = make_sweep_config(args.so);
    cfg.kind = cheb::Kind::FirstKind;
    const auto coeffs = cheb::coeff_sweep(fn, args.N, cfg);
    const cheb::ChebSeries series = cheb::to_series(coeffs, cheb::Kind::FirstKind);
    const bool with_exact = fn.has_deriv_oracle();

    Table t;
    t.columns = {"s", "x", "value"};
    if (with_exact) {
        t.columns.push_back("exact");
        t.columns.push_back("abs_err");
    }
    for (int s : args.s_list) {
        const cheb::ChebSeries ds = cheb::differentiate(series, s);
        for (int i = 0; i < args.points; ++i) {
            const double x = -1.0 + 2.0 * i / (args.points - 1);
            const double v = cheb::eval_series(ds, x);
            std::vector<std::string> row = {format_int(s), format_double(x), format_double(v)};
            if (with_exact) {
                const double exact = fn.deriv_oracle(s, x);
                row.push_back(format_double(exact));
                row.push_back(format_double(std::abs(v - exact)));
            }
            t.add_row(std::move(row));
        }
    }
    emit(t, args.format, args.out);
}

// ---------------------------------------------------------------------------
// roots

struct RootsArgs {
    FunctionOptions fo;
    StrategyOptions so;
    int N = 60;
    int s = 1;
    bool compare = false;
    std::string format = "csv";
    std::string out;
};

void run_roots(const RootsArgs& args) {
    const AnalyticFn fn = resolve_function(args.fo);
    const bool with_oracle = fn.has_deriv_oracle();
    std::vector<double> oracle_roots;
    if (with_oracle)
        oracle_roots = cheb::scan_roots([&](double x) { return fn.deriv_oracle(args.s, x); },
                                        -1.0, 1.0);

    Table t;
    t.columns = {"strategy", "root", "residual"};
    if (with_oracle)
        t.columns.push_back("err_vs_oracle");

    auto emit_strategy = [&](const char* label, cheb::RootStrategy strategy) {
        const cheb::RootSet rs = cheb::roots_of_derivative(fn, args.s, args.N, strategy,
                                                           args.so.rho, env_threads());
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            std::vector<std::string> row = {label, format_double(rs.roots[i]),
                                            format_double(rs.residuals[i])};
            if (with_oracle) {
                double best = std::numeric_limits<double>::infinity();
                for (double o : oracle_roots)
                    best = std::min(best, std::abs(o - rs.roots[i]));
                row.push_back(format_double(best));
            }
            t.add_row(std::move(row));
        }
    };

    if (args.so.strategy == "fixed" && !args.compare) {
        emit_strategy("fixed", cheb::RootStrategy::FixedRho);
    } else {
        emit_strategy("optimal", cheb::RootStrategy::OptimalRadius);
        if (args.compare)
            emit_strategy("fixed", cheb::RootStrategy::FixedRho);
    }
    emit(t, args.format, args.out);
}

// ---------------------------------------------------------------------------
// repro

struct ReproArgs {
    std::string experiment;
    std::string out_dir = ".";
};

void write_experiment(const Table& t, const ReproArgs& args, const std::string& id) {
    std::filesystem::create_directories(args.out_dir);
    const std::string path = (std::filesystem::path(args.out_dir) / (id + ".csv")).string();
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw cheb::evaluation_error("cannot open '" + path + "'");
    write_csv(t, file);
}

Table cond_overlay_table(const AnalyticFn& fn, const std::vector<int>& ns, double rho_lo,
                         double rho_hi, int count, int m) {
    Table t;
    t.columns = {"fn", "n", "rho", "kappa", "err_ratio"};
    for (int n : ns) {
        const double ref = reference_coeff(fn, n, cheb::Kind::FirstKind);
        for (int i = 0; i < count; ++i) {
            const double rho = rho_lo + (rho_hi - rho_lo) * i / (count - 1);
            const auto est = cheb::kappa_t(fn, n, rho, ref);
            const double got = cheb::coeff_t(fn, n, {rho, m}).value.real();
            const double rel = ref != 0.0 ? std::abs(got - ref) / std::abs(ref)
                                          : std::numeric_limits<double>::infinity();
            t.add_row({fn.name, format_int(n), format_double(rho), format_double(est.kappa),
                       format_double(rel / kMachineEps)});
        }
    }
    return t;
}

Table fixed_rho_error_table(const AnalyticFn& fn, int N, int m,
                            const std::vector<double>& rhos) {
    Table t;
    t.columns = {"rho", "n", "coeff", "norm_abs_err", "rel_err"};
    for (double rho : rhos) {
        const auto coeffs = cheb::batch_coeffs_t(fn, N, {rho, m}, env_threads());
        for (const auto& c : coeffs) {
            const double ref = fn.coeff_oracle(c.n);
            const double err = std::abs(c.value.real() - ref);
            t.add_row({format_double(rho), format_int(c.n), format_double(c.value.real()),
                       format_double(std::pow(rho, c.n) * err),
                       format_double(err / std::abs(ref))});
        }
    }
    return t;
}

Table diff_table(const AnalyticFn& fn, int N, const cheb::SweepConfig& cfg,
                 const std::vector<int>& orders) {
    const auto coeffs = cheb::coeff_sweep(fn, N, cfg);
    const cheb::ChebSeries series = cheb::to_series(coeffs, cheb::Kind::FirstKind);
    Table t;
    t.columns = {"s", "x", "value", "exact", "abs_err"};
    for (int s : orders) {
        const cheb::ChebSeries ds = cheb::differentiate(series, s);
        for (int i = 0; i < 100; ++i) {
            const double x = -1.0 + 2.0 * i / 99.0;
            const double v = cheb::eval_series(ds, x);
            const double exact = fn.deriv_oracle(s, x);
            t.add_row({format_int(s), format_double(x), format_double(v),
                       format_double(exact), format_double(std::abs(v - exact))});
        }
    }
    return t;
}

void run_repro(const ReproArgs& args) {
    const std::string& id = args.experiment;
    const int threads = env_threads();

    if (id == "fig-cond-entire") {
        Table t1 = cond_overlay_table(cheb::registry_lookup("exp"), {20, 60}, 1.0, 80.0, 160, 512);
        Table t2 = cond_overlay_table(cheb::registry_lookup("cos_affine", {2.0, 2.0}), {20, 60},
                                      1.0, 40.0, 160, 512);
        for (auto& row : t2.rows)
            t1.rows.push_back(std::move(row));
        write_experiment(t1, args, id);
        return;
    }
    if (id == "fig-cond-pole") {
        Table t1 =
            cond_overlay_table(cheb::registry_lookup("pole", {2.0}), {20, 60}, 1.0, 3.7, 160, 8192);
        Table t2 = cond_overlay_table(cheb::registry_lookup("rational_runge"), {20, 60}, 1.0, 2.4,
                                      160, 8192);
        for (auto& row : t2.rows)
            t1.rows.push_back(std::move(row));
        write_experiment(t1, args, id);
        return;
    }
    if (id == "fig-abs-rel-exp") {
        write_experiment(
            fixed_rho_error_table(cheb::registry_lookup("exp"), 50, 101, {1.0, 4.0, 40.0}), args,
            id);
        return;
    }
    if (id == "fig-abs-rel-pole") {
        write_experiment(fixed_rho_error_table(cheb::registry_lookup("pole", {2.0}), 50, 202,
                                               {1.0, 2.0, 3.0, 3.5}),
                         args, id);
        return;
    }
    if (id == "fig-relopt") {
        Table t;
        t.columns = {"fn", "n", "rho", "m", "rel_err"};
        const AnalyticFn e = cheb::registry_lookup("exp");
        cheb::SweepConfig ecfg;
        ecfg.strategy = cheb::Strategy::Optimal;
        ecfg.m = 201;
        ecfg.threads = threads;
        for (const auto& c : cheb::coeff_sweep(e, 100, ecfg)) {
            const double ref = e.coeff_oracle(c.n);
            t.add_row({"exp", format_int(c.n), format_double(c.plan.rho), format_int(c.plan.m),
                       format_double(std::abs(c.value.real() - ref) / std::abs(ref))});
        }
        const AnalyticFn p = cheb::registry_lookup("pole", {2.0});
        cheb::SweepConfig pcfg;
        pcfg.strategy = cheb::Strategy::Optimal;
        pcfg.eps = 1e-14;
        pcfg.threads = threads;
        for (const auto& c : cheb::coeff_sweep(p, 100, pcfg)) {
            const double ref = p.coeff_oracle(c.n);
            t.add_row({"pole", format_int(c.n), format_double(c.plan.rho), format_int(c.plan.m),
                       format_double(std::abs(c.value.real() - ref) / std::abs(ref))});
        }
        write_experiment(t, args, id);
        return;
    }
    if (id == "fig-diff-exp" || id == "fig-diff-cos") {
        const AnalyticFn fn =
            id == "fig-diff-exp" ? cheb::registry_lookup("exp") : cheb::registry_lookup("cos");
        cheb::SweepConfig cfg;
        cfg.strategy = cheb::Strategy::Optimal;
        cfg.m = 100;
        cfg.threads = threads;
        const std::vector<int> orders =
            id == "fig-diff-exp" ? std::vector<int>{5, 20, 80} : std::vector<int>{10, 40, 80};
        write_experiment(diff_table(fn, 100, cfg, orders), args, id);
        return;
    }
    if (id == "fig-diff-rat4") {
        cheb::SweepConfig cfg;
        cfg.strategy = cheb::Strategy::Optimal;
        cfg.eps = 1e-16;
        cfg.threads = threads;
        write_experiment(diff_table(cheb::registry_lookup("rational4"), 100, cfg, {4, 8, 12}),
                         args, id);
        return;
    }
    if (id == "fig-roots-exp2cos") {
        const AnalyticFn fn = cheb::registry_lookup("exp2cos");
        Table t;
        t.columns = {"s", "strategy", "root", "residual", "err_vs_oracle"};
        for (int s : {1, 2, 4, 5}) {
            const auto oracle = cheb::scan_roots(
                [&](double x) { return fn.deriv_oracle(s, x); }, -1.0, 1.0);
            for (const char* label : {"optimal", "fixed"}) {
                const auto strategy = label == std::string("optimal")
                                          ? cheb::RootStrategy::OptimalRadius
                                          : cheb::RootStrategy::FixedRho;
                const auto rs = cheb::roots_of_derivative(fn, s, 60, strategy, 1.0, threads);
                for (std::size_t i = 0; i < rs.roots.size(); ++i) {
                    double best = std::numeric_limits<double>::infinity();
                    for (double o : oracle)
                        best = std::min(best, std::abs(o - rs.roots[i]));
                    t.add_row({format_int(s), label, format_double(rs.roots[i]),
                               format_double(rs.residuals[i]), format_double(best)});
                }
            }
        }
        write_experiment(t, args, id);
        return;
    }
    if (id == "ex-m-epsilon") {
        const AnalyticFn p4 = cheb::registry_lookup("pole", {4.0});
        const double rho = cheb::radius_auto(p4, 100, p4.rho_max, 1e-5);
        const auto c = cheb::coeff_t(p4, 100, {rho, 20010});
        const double ref = p4.coeff_oracle(100);
        const double rel = std::abs(c.value.real() - ref) / std::abs(ref);
        Table t;
        t.columns = {"n", "rho", "m", "coeff", "ref", "rel_err"};
        t.add_row({"100", format_double(rho), "20010", format_double(c.value.real()),
                   format_double(ref), format_double(rel)});
        write_experiment(t, args, id);
        std::cout << "rel_err=" << format_double(rel) << "\n";
        return;
    }
    throw cheb::precondition_error(
        "unknown experiment '" + id +
        "'; known ids: fig-cond-entire, fig-cond-pole, fig-abs-rel-exp, fig-abs-rel-pole, "
        "fig-relopt, fig-diff-exp, fig-diff-cos, fig-diff-rat4, fig-roots-exp2cos, "
        "ex-m-epsilon");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev expansion coefficients via Bernstein-ellipse contour integrals"};
    app.require_subcommand(1);

    CoeffsArgs coeffs;
    CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "compute expansion coefficients");
    add_function_options(coeffs_cmd, coeffs.fo);
    add_strategy_options(coeffs_cmd, coeffs.so);
    coeffs_cmd->add_option("--N", coeffs.N, "highest coefficient index")->required();
    coeffs_cmd->add_option("--format", coeffs.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    coeffs_cmd->add_option("--out", coeffs.out, "output file (default stdout)");

    CondArgs cond;
    CLI::App* cond_cmd = app.add_subcommand("cond", "condition numbers over a radius grid");
    add_function_options(cond_cmd, cond.fo);
    cond_cmd->add_option("--n", cond.n_list, "coefficient indices")->delimiter(',');
    cond_cmd->add_option("--rho-grid", cond.rho_grid, "grid as lo:hi:count");
    cond_cmd->add_option("--m", cond.m, "measurement node count (0 = heuristic)");
    cond_cmd->add_option("--eps", cond.eps, "accuracy target for the node heuristic");
    cond_cmd->add_option("--kind", cond.kind, "T | U")->check(CLI::IsMember({"T", "U"}));
    cond_cmd->add_option("--format", cond.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cond_cmd->add_option("--out", cond.out, "output file (default stdout)");

    DiffArgs diff;
    CLI::App* diff_cmd = app.add_subcommand("diff", "spectral differentiation");
    add_function_options(diff_cmd, diff.fo);
    add_strategy_options(diff_cmd, diff.so);
    diff_cmd->add_option("--N", diff.N, "truncation degree");
    diff_cmd->add_option("--s", diff.s_list, "derivative orders")->delimiter(',')->required();
    diff_cmd->add_option("--points", diff.points, "evaluation grid size");
    diff_cmd->add_option("--format", diff.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    diff_cmd->add_option("--out", diff.out, "output file (default stdout)");

    RootsArgs roots;
    CLI::App* roots_cmd = app.add_subcommand("roots", "roots of a derivative on [-1, 1]");
    add_function_options(roots_cmd, roots.fo);
    add_strategy_options(roots_cmd, roots.so);
    roots_cmd->add_option("--N", roots.N, "truncation degree");
    roots_cmd->add_option("--s", roots.s, "derivative order (0 = the function itself)");
    roots_cmd->add_flag("--compare", roots.compare, "emit both strategies side by side");
    roots_cmd->add_option("--format", roots.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    roots_cmd->add_option("--out", roots.out, "output file (default stdout)");

    ReproArgs repro;
    CLI::App* repro_cmd = app.add_subcommand("repro", "reproduce a canned experiment as CSV");
    repro_cmd->add_option("experiment", repro.experiment, "experiment id")->required();
    repro_cmd->add_option("--out", repro.out_dir, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (coeffs_cmd->parsed())
            run_coeffs(coeffs);
        else if (cond_cmd->parsed())
            run_cond(cond);
        else if (diff_cmd->parsed())
            run_diff(diff);
        else if (roots_cmd->parsed())
            run_roots(roots);
        else if (repro_cmd->parsed())
            run_repro(repro);
        return 0;
    } catch (const cheb::registry_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cheb::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cheb::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cheb::analyticity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cheb::no_oracle_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}
