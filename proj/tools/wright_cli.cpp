// Command-line front end: point evaluation (series and tabulated closed
// forms), the identity-suite runner with a JSON report, CSV figure-data
// emission, and Laplace-inversion queries against the contour oracle.
//
// Exit codes: 0 success, 1 identity-suite expectation failure, 2 invalid
// parameters or flags, 3 engine error (non-convergence, overflow, contour
// symmetry), 4 I/O error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wright/classical.hpp"
#include "wright/closed_form.hpp"
#include "wright/common.hpp"
#include "wright/identities.hpp"
#include "wright/laplace.hpp"
#include "wright/rational.hpp"
#include "wright/sisters.hpp"
#include "wright/wright.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitEngine = 3;
constexpr int kExitIo = 4;

struct ParsedValue {
    double value = 0.0;
    std::optional<wright::Rational> exact;
};

ParsedValue parse_value(const std::string& text, const char* what) {
    if (auto r = wright::parse_rational(text))
        return {r->value(), r};
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw std::domain_error(std::string("cannot parse ") + what + " '" + text + "'");
    return {v, std::nullopt};
}

// ---------------------------------------------------------------- figures

std::vector<double> figure_grid(double lo, double hi, int points, bool log_spacing) {
    std::vector<double> g;
    g.reserve(points);
    if (points == 1) {
        g.push_back(lo);
        return g;
    }
    if (log_spacing) {
        const double llo = std::log(lo), lhi = std::log(hi);
        for (int i = 0; i < points; ++i)
            g.push_back(std::exp(llo + (lhi - llo) * i / (points - 1)));
    } else {
        for (int i = 0; i < points; ++i)
            g.push_back(lo + (hi - lo) * i / (points - 1));
    }
    return g;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& columns) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    std::fprintf(f, "%s\n", header.c_str());
    const size_t rows = columns.empty() ? 0 : columns[0].size();
    for (size_t i = 0; i < rows; ++i) {
        for (size_t c = 0; c < columns.size(); ++c)
            std::fprintf(f, c + 1 == columns.size() ? "%.17g\n" : "%.17g,", columns[c][i]);
    }
    if (std::fclose(f) != 0) throw std::ios_base::failure("write failed for '" + path + "'");
}

std::string with_suffix(const std::string& out, const std::string& suffix) {
    const auto dot = out.rfind(".csv");
    if (dot != std::string::npos && dot == out.size() - 4)
        return out.substr(0, dot) + suffix + ".csv";
    return out + suffix + ".csv";
}

void emit_sisters_figure(double nu, bool three_only, const std::string& out, int points,
                         bool log_spacing) {
    using wright::SisterRole;
    const std::vector<SisterRole> roles = {SisterRole::mu_one, SisterRole::mu_zero,
                                           SisterRole::mu_nu, SisterRole::mu_one_minus_nu};
    const std::vector<std::string> names3 = {"phi", "psi", "chi"};
    const std::vector<std::string> names4 = {"mu_1", "mu_0", "mu_nu", "mu_1-nu"};
    // three sisters: mu = 1, 0, 1/2 (= nu = 1-nu merged)
    const size_t ncurves = three_only ? 3 : 4;

    const auto emit = [&](bool vs_t, const std::string& path) {
        const auto grid = figure_grid(0.01, 5.0, points, log_spacing);
        std::vector<std::vector<double>> cols(1 + ncurves);
        cols[0] = grid;
        for (size_t c = 0; c < ncurves; ++c) {
            cols[c + 1].reserve(grid.size());
            for (double g : grid) {
                const double x = vs_t ? 1.0 : g;
                const double t = vs_t ? g : 1.0;
                cols[c + 1].push_back(wright::sister({nu, roles[c]}, x, t, 1e-12, 200000));
            }
        }
        std::string header = vs_t ? "t" : "x";
        for (size_t c = 0; c < ncurves; ++c)
            header += "," + (three_only ? names3[c] : names4[c]);
        write_csv(path, header, cols);
    };
    emit(true, with_suffix(out, "_vs_t"));
    emit(false, with_suffix(out, "_vs_x"));
}

void emit_figure(const std::string& id, const std::string& out, int points,
                 bool log_spacing) {
    using namespace wright;
    const double th = 1.0 / 3.0;
    if (id == "fig1") {
        const auto grid = figure_grid(0.0, 5.0, points, false);
        std::vector<double> m;
        m.reserve(grid.size());
        for (double x : grid) m.push_back(mainardi_m(2 * th, x).value);
        write_csv(out, "x,M_2/3(x)", {grid, m});
        return;
    }
    if (id == "fig3a" || id == "fig3b") {
        const bool pos = id == "fig3a";
        const auto grid = figure_grid(0.01, 5.0, points, log_spacing);
        std::vector<double> lhs, rhs;
        for (double x : grid) {
            lhs.push_back(wright_series({-2 * th, 0.0}, pos ? x : -x, 1e-12, 200000).value);
            rhs.push_back(closed_form({2, 3}, {0, 1}, pos ? Sign::plus : Sign::minus, x).value);
        }
        write_csv(out, "x,wright_series,whittaker_form", {grid, lhs, rhs});
        return;
    }
    if (id == "fig4") {
        const auto grid = figure_grid(0.01, 5.0, points, log_spacing);
        std::vector<double> lhs, rhs;
        for (double x : grid) {
            lhs.push_back(wright_series({-2 * th, 0.0}, -std::pow(x, -2 * th), 1e-12, 200000).value);
            const double X = 4.0 / (27.0 * x * x);
            rhs.push_back(std::sqrt(3.0 / kPi) * std::exp(-X / 2) *
                          whittaker_w({0.5, 1.0 / 6.0, X}));
        }
        write_csv(out, "x,wright_series,whittaker_form", {grid, lhs, rhs});
        return;
    }
    if (id == "fig5") return emit_sisters_figure(0.5, true, out, points, log_spacing);
    if (id == "fig6") return emit_sisters_figure(th, false, out, points, log_spacing);
    if (id == "fig7") return emit_sisters_figure(2 * th, false, out, points, log_spacing);
    if (id == "fig8") {
        const auto grid = figure_grid(0.01, 5.0, points, log_spacing);
        std::vector<double> lhs, rhs;
        for (double t : grid) {
            lhs.push_back(std::pow(t, -2 * th) *
                          wright_series({-2 * th, th}, -std::pow(t, -2 * th), 1e-12,
                                        200000).value);
            const double X = 4.0 / (27.0 * t * t);
            rhs.push_back(1.5 * std::sqrt(3.0 / kPi) * std::exp(-X / 2) *
                          whittaker_w({0.5, 1.0 / 6.0, X}));
        }
        write_csv(out, "t,wright_series,whittaker_form", {grid, lhs, rhs});
        return;
    }
    throw std::domain_error("unknown figure id '" + id +
                            "' (use fig1, fig3a, fig3b, fig4, fig5, fig6, fig7, fig8)");
}

// ---------------------------------------------------------------- commands

int cmd_eval(const std::string& lambda_s, const std::string& nu_s, const std::string& mu_s,
             bool second_kind, const std::string& z_s, const std::string& x_s,
             double rel_tol, const std::string& method) {
    using namespace wright;
    if (mu_s.empty()) throw std::domain_error("--mu is required");
    if (lambda_s.empty() == nu_s.empty())
        throw std::domain_error("give exactly one of --lambda or --nu");
    if (!nu_s.empty() && !second_kind)
        throw std::domain_error("--nu requires --second-kind (or use --lambda)");
    if (z_s.empty() == x_s.empty())
        throw std::domain_error("give exactly one of --z or --x");

    const ParsedValue mu = parse_value(mu_s, "--mu");
    ParsedValue nu{};
    double lambda = 0.0;
    if (!nu_s.empty()) {
        nu = parse_value(nu_s, "--nu");
        if (!(nu.value > 0.0 && nu.value < 1.0))
            throw std::domain_error("--nu must lie in (0,1)");
        lambda = -nu.value;
    } else {
        lambda = parse_value(lambda_s, "--lambda").value;
    }
    double z = 0.0;
    if (!z_s.empty()) {
        z = parse_value(z_s, "--z").value;
    } else {
        const double x = parse_value(x_s, "--x").value;
        if (!(x > 0.0)) throw std::domain_error("--x must be > 0");
        z = -x;   // second-kind convention: W_{-nu,mu}(-x)
    }

    const bool want_series = method == "series" || method == "both";
    const bool want_closed = method == "closed" || method == "both";
    if (!want_series && !want_closed)
        throw std::domain_error("--method must be series, closed or both");

    std::optional<EvalResult> series;
    if (want_series) series = wright_series({lambda, mu.value}, z, rel_tol);

    std::optional<EvalResult> closed;
    if (want_closed) {
        if (!nu.exact || !mu.exact)
            throw std::domain_error(
                "--method closed needs exact rational --nu/--mu (e.g. 2/3); registered: " +
                closed_form_entries());
        closed = closed_form(*nu.exact, *mu.exact, z < 0 ? Sign::minus : Sign::plus,
                             std::fabs(z));
    }

    if (method == "series")
        std::printf("value=%.17g terms=%d err_estimate=%.3g\n", series->value,
                    series->terms_used, series->err_estimate);
    else if (method == "closed")
        std::printf("value=%.17g terms=%d err_estimate=%.3g\n", closed->value,
                    closed->terms_used, closed->err_estimate);
    else
        std::printf("series=%.17g closed=%.17g diff=%.3g terms=%d err_estimate=%.3g\n",
                    series->value, closed->value, std::fabs(series->value - closed->value),
                    series->terms_used, series->err_estimate);
    return kExitOk;
}

int cmd_check(const std::string& id, int grid_points, const std::string& out,
              std::optional<double> rel_tol) {
    using namespace wright;
    const SuiteReport report =
        id.empty() ? run_all(grid_points, rel_tol) : run_one(id, grid_points, rel_tol);
    const auto j = to_json(report);

    std::ofstream f(out);
    if (!f) throw std::ios_base::failure("cannot open '" + out + "' for writing");
    f << j.dump(2) << "\n";
    if (!f.good()) throw std::ios_base::failure("write failed for '" + out + "'");
    f.close();

    for (const auto& r : report.records)
        std::printf("%-28s %-10s max_rel_err=%.3e worst_point=%.6g\n", r.id.c_str(),
                    r.status.c_str(), r.max_rel_err, r.worst_point);
    std::printf("summary: total=%d pass=%d fail=%d disputed=%d report=%s\n", report.total,
                report.passed, report.failed, report.disputed, out.c_str());
    return (report.failed == 0 && report.disputed == 0) ? kExitOk : kExitCheckFailed;
}

int cmd_invert(double nu, double mu, double x, double t, int nodes) {
    using namespace wright;
    ContourSpec spec;
    spec.node_count = nodes;
    const double oracle = invert(nu, mu, x, t, spec);
    const double pair =
        std::pow(t, mu - 1.0) * wright_series({-nu, mu}, -x / std::pow(t, nu)).value;
    std::printf("oracle=%.17g wright=%.17g diff=%.3g\n", oracle, pair,
                std::fabs(oracle - pair));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wright functions of the second kind: series evaluation, tabulated "
                 "closed forms, identity verification, figure data, Laplace inversion.\n"
                 "WRIGHT_TERM_CAP in the environment overrides the series term cap "
                 "(default 10000)."};
    app.require_subcommand(1);

    // eval
    std::string lambda_s, nu_s, mu_s, z_s, x_s, method = "series";
    bool second_kind = false;
    double rel_tol = 1e-12;
    auto* eval = app.add_subcommand("eval", "evaluate W_{lambda,mu}(z) at one point");
    eval->add_option("--lambda", lambda_s, "first parameter (decimal or p/q)");
    eval->add_option("--nu", nu_s, "second-kind order nu in (0,1), lambda = -nu");
    eval->add_option("--mu", mu_s, "second parameter (decimal or p/q)");
    eval->add_flag("--second-kind", second_kind, "interpret --nu as lambda = -nu");
    eval->add_option("--z", z_s, "argument z");
    eval->add_option("--x", x_s, "positive variable x, evaluates W(-x)");
    eval->add_option("--rel-tol", rel_tol, "series stopping tolerance")
        ->default_val(1e-12);
    eval->add_option("--method", method, "series | closed | both")->default_val("series");

    // check
    std::string check_id, check_out = "wright-report.json";
    int grid_points = 41;
    double check_rel_tol = -1.0;
    auto* check = app.add_subcommand("check", "run the identity suite, write JSON report");
    check->add_option("--id", check_id, "run a single registered identity");
    check->add_option("--grid-points", grid_points, "grid density per record")
        ->default_val(41);
    check->add_option("--out", check_out, "report path")->default_val("wright-report.json");
    check->add_option("--rel-tol", check_rel_tol, "override hold tolerance");

    // figure
    std::string fig_id, fig_out;
    int fig_points = 500;
    bool log_spacing = false;
    auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
    figure->add_option("--id", fig_id, "fig1|fig3a|fig3b|fig4|fig5|fig6|fig7|fig8")
        ->required();
    figure->add_option("--out", fig_out, "output CSV path (fig5/6/7 write _vs_t and _vs_x)")
        ->required();
    figure->add_option("--points", fig_points, "rows per file")->default_val(500);
    figure->add_flag("--log-spacing", log_spacing, "geometric instead of linear grid");

    // invert
    double inv_nu = 0.5, inv_mu = 1.0, inv_x = 1.0, inv_t = 1.0;
    int inv_nodes = 96;
    auto* inv = app.add_subcommand("invert",
                                   "Laplace inversion of s^{-mu} e^{-x s^nu} vs the series");
    inv->add_option("--nu", inv_nu, "exponent nu in (0,1)")->required();
    inv->add_option("--mu", inv_mu, "power mu >= 0")->required();
    inv->add_option("--x", inv_x, "x > 0")->required();
    inv->add_option("--t", inv_t, "t > 0")->required();
    inv->add_option("--nodes", inv_nodes, "contour quadrature nodes")->default_val(96);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    try {
        if (eval->parsed())
            return cmd_eval(lambda_s, nu_s, mu_s, second_kind, z_s, x_s, rel_tol, method);
        if (check->parsed())
            return cmd_check(check_id, grid_points, check_out,
                             check_rel_tol > 0 ? std::optional<double>(check_rel_tol)
                                               : std::nullopt);
        if (figure->parsed()) {
            emit_figure(fig_id, fig_out, fig_points, log_spacing);
            return kExitOk;
        }
        if (inv->parsed()) return cmd_invert(inv_nu, inv_mu, inv_x, inv_t, inv_nodes);
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadParams;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "engine error: %s\n", e.what());
        return kExitEngine;
    }
    return kExitBadParams;
}
