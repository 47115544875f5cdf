// Command-line front end: every experiment as a subcommand, emitting CSV
// data, JSON reports, and static SVG plots. All outputs are deterministic
// for a fixed invocation and carry a JSON sidecar echoing the parameters.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaborpair/csv.hpp"
#include "gaborpair/gabor.hpp"
#include "gaborpair/numeric.hpp"
#include "gaborpair/partner.hpp"
#include "gaborpair/report.hpp"
#include "gaborpair/svg.hpp"
#include "gaborpair/theta.hpp"
#include "gaborpair/verify.hpp"
#include "gaborpair/windows.hpp"
#include "gaborpair/zak.hpp"

namespace gp = gaborpair;
using gp::json;

namespace {

gp::WindowSpec make_window(const std::string& name, double sigma, double a,
                           double c_psi) {
    if (name == "gaussian") return gp::WindowSpec::gaussian(sigma);
    if (name == "box") return gp::WindowSpec::box();
    if (name == "bastiaans")
        return gp::WindowSpec::bastiaans(c_psi > 0 ? c_psi
                                                   : gp::calibrate_bastiaans_constant());
    if (name == "example4-g") return gp::WindowSpec::example4_g(a);
    if (name == "example4-gamma") return gp::WindowSpec::example4_gamma(a);
    throw CLI::ValidationError("unknown window: " + name);
}

void write_sidecar(const std::string& path, const json& params) {
    json side{{"artifact", path}, {"params", params}};
    gp::write_file_atomic(path + ".meta.json", side.dump(2) + "\n");
}

void emit_report(const gp::Report& rep, const std::string& json_path) {
    if (!json_path.empty())
        gp::write_file_atomic(json_path, rep.to_json().dump(2) + "\n");
    for (const auto& c : rep.checks)
        std::printf("%-44s %13.6e  tol %9.3e  %s\n", c.check.c_str(), c.value,
                    c.tolerance, c.pass ? "pass" : "FAIL");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabor systems at critical density: Zak analysis, theta kernel, "
                 "and reproducing-partner experiments"};
    app.require_subcommand(1);

    // ---- zak ----
    auto* zak_cmd = app.add_subcommand("zak", "Zak transform field, checks, CSV dump");
    std::string zak_window = "gaussian";
    double zak_sigma = 1.0, zak_a = 1.0, zak_cpsi = -1.0;
    int zak_nx = 512, zak_nw = 512, zak_K = -1;
    double zak_xoff = 0.0, zak_woff = 0.0, zak_tol = 1e-8;
    uint64_t zak_seed = 1234;
    std::string zak_out, zak_json;
    zak_cmd->add_option("--window", zak_window, "window kind")
        ->check(CLI::IsMember({"gaussian", "box", "bastiaans", "example4-g",
                               "example4-gamma"}));
    zak_cmd->add_option("--sigma", zak_sigma, "Gaussian width");
    zak_cmd->add_option("--a", zak_a, "lattice parameter");
    zak_cmd->add_option("--c-psi", zak_cpsi, "Bastiaans constant (default: calibrated)");
    zak_cmd->add_option("--nx", zak_nx, "x resolution");
    zak_cmd->add_option("--nw", zak_nw, "omega resolution");
    zak_cmd->add_option("--radius", zak_K, "series truncation (default: tail bound)");
    zak_cmd->add_option("--x-offset", zak_xoff, "x grid offset in node units");
    zak_cmd->add_option("--w-offset", zak_woff, "omega grid offset in node units");
    zak_cmd->add_option("--tol", zak_tol, "residual tolerance for the checks");
    zak_cmd->add_option("--seed", zak_seed, "seed for check nodes");
    zak_cmd->add_option("--out", zak_out, "CSV output path");
    zak_cmd->add_option("--json", zak_json, "JSON report path");

    // ---- theta ----
    auto* theta_cmd = app.add_subcommand("theta", "theta symbol grid and checks");
    int theta_n = 1024, theta_R = 8;
    double theta_tol = 1e-12;
    std::string theta_out, theta_json;
    theta_cmd->add_option("--grid", theta_n, "grid resolution per axis");
    theta_cmd->add_option("--radius", theta_R, "double-sum truncation");
    theta_cmd->add_option("--tol", theta_tol, "tolerance for grid positivity and the zero");
    theta_cmd->add_option("--out", theta_out, "CSV output path");
    theta_cmd->add_option("--json", theta_json, "JSON report path");

    // ---- windows ----
    auto* windows_cmd = app.add_subcommand("windows", "window table utilities");
    windows_cmd->require_subcommand(1);
    auto* win_cmd = windows_cmd->add_subcommand("dump", "dump a window as CSV");
    std::string win_window = "gaussian", win_out;
    double win_sigma = 1.0, win_a = 1.0, win_cpsi = -1.0;
    double win_tmin = -6.0, win_tmax = 6.0;
    int win_samples = 4096;
    win_cmd->add_option("--window", win_window, "window kind")
        ->check(CLI::IsMember({"gaussian", "box", "bastiaans", "example4-g",
                               "example4-gamma"}));
    win_cmd->add_option("--sigma", win_sigma, "Gaussian width");
    win_cmd->add_option("--a", win_a, "lattice parameter");
    win_cmd->add_option("--c-psi", win_cpsi, "Bastiaans constant");
    win_cmd->add_option("--t-min", win_tmin, "grid start");
    win_cmd->add_option("--t-max", win_tmax, "grid end");
    win_cmd->add_option("--samples", win_samples, "sample count");
    win_cmd->add_option("--out", win_out, "CSV output path")->required();

    // ---- example4 ----
    auto* ex4_cmd = app.add_subcommand("example4", "figure bundle for the example pair");
    double ex4_a = 1.0;
    std::string ex4_dir = "figs";
    bool ex4_svg = true;
    ex4_cmd->add_option("--a", ex4_a, "lattice parameter");
    ex4_cmd->add_option("--out-dir", ex4_dir, "output directory");
    ex4_cmd->add_flag("--svg,!--no-svg", ex4_svg, "write fig1.svg");

    // ---- bastiaans ----
    auto* bast_cmd = app.add_subcommand("bastiaans", "calibration and product checks");
    std::string bast_json;
    bast_cmd->add_option("--json", bast_json, "JSON report path");

    // ---- partner ----
    auto* partner_cmd = app.add_subcommand("partner", "reproducing-partner experiments");
    partner_cmd->require_subcommand(1);
    auto* col_cmd = partner_cmd->add_subcommand("column-sums",
                                                "T_R(n,m) profile and log-slope fit");
    int col_n = 0, col_m = 0, col_radius = 256;
    bool col_corrected = true;
    std::string col_json;
    col_cmd->add_option("--n", col_n, "target index n");
    col_cmd->add_option("--m", col_m, "target index m");
    col_cmd->add_option("--radius", col_radius, "largest truncation radius");
    col_cmd->add_flag("--corrected,!--uncorrected", col_corrected,
                      "include the kernel correction");
    col_cmd->add_option("--json", col_json, "JSON output path");

    auto* weak_cmd = partner_cmd->add_subcommand("weak-identity",
                                                 "partial-sum reconstruction trace");
    std::string weak_json;
    weak_cmd->add_option("--json", weak_json, "JSON report path");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run acceptance checks");
    std::string verify_group_name = "all", verify_json;
    verify_cmd->add_option("group", verify_group_name, "criterion group")
        ->check(CLI::IsMember({"all", "zak", "theta", "kernel", "example4",
                               "bastiaans", "xi0", "hg", "contrast", "weak"}));
    verify_cmd->add_option("--json", verify_json, "JSON output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2; // usage error
    }

    try {
        if (*zak_cmd) {
            const gp::WindowSpec w = make_window(zak_window, zak_sigma, zak_a, zak_cpsi);
            const gp::ZakField Z =
                gp::zak_forward(w, zak_a, zak_nx, zak_nw, zak_K, zak_xoff, zak_woff);
            gp::Report rep = gp::check_quasiperiodicity(Z, w, 64, zak_seed);
            for (auto& c : rep.checks) {
                c.tolerance = zak_tol;
                c.pass = std::abs(c.value) <= zak_tol;
            }
            // unitarity against the window's L2 norm; skipped for the
            // Bastiaans window, which is bounded but not square integrable
            if (zak_window == "gaussian" || zak_window == "box") {
                rep.add_abs("unitarity_norm_deviation", Z.l2_norm() - 1.0, 1e-8,
                            json{{"nx", zak_nx}, {"nw", zak_nw}});
            } else if (zak_window == "example4-g") {
                // quadrature-limited: the field is Hoelder at the omega edges
                rep.add_abs("unitarity_norm_deviation",
                            Z.l2_norm() - std::sqrt(gp::example4_g_norm2(zak_a)), 1e-3,
                            json{{"nx", zak_nx}, {"nw", zak_nw}});
            } else if (zak_window == "example4-gamma") {
                rep.add_abs("unitarity_norm_deviation",
                            Z.l2_norm() - std::sqrt(gp::example4_gamma_norm2(zak_a)),
                            0.2, json{{"nx", zak_nx}, {"nw", zak_nw}});
            }
            if (!zak_out.empty()) {
                gp::write_file_atomic(zak_out, gp::zak_csv(Z));
                write_sidecar(zak_out, json{{"window", zak_window},
                                            {"a", zak_a},
                                            {"nx", zak_nx},
                                            {"nw", zak_nw},
                                            {"radius", zak_K},
                                            {"seed", zak_seed}});
            }
            emit_report(rep, zak_json);
            return rep.all_pass() ? 0 : 1;
        }

        if (*theta_cmd) {
            const std::vector<double> grid = gp::theta_grid(theta_n, theta_R);
            gp::Report rep;
            rep.title = "theta checks";
            double min_val = 1e300;
            for (double v : grid) min_val = std::min(min_val, v);
            rep.add("grid_min", min_val, theta_tol, min_val >= -theta_tol,
                    json{{"grid", theta_n}});
            rep.add_abs("zero_at_half_half", gp::theta_eval(0.5, 0.5, theta_R), theta_tol);
            gp::Report hess = gp::theta_hessian_check(theta_R, 1e-3);
            for (auto& c : hess.checks) rep.checks.push_back(std::move(c));
            if (!theta_out.empty()) {
                gp::write_file_atomic(theta_out, gp::theta_csv(grid, theta_n));
                write_sidecar(theta_out,
                              json{{"grid", theta_n}, {"radius", theta_R}});
            }
            emit_report(rep, theta_json);
            return rep.all_pass() ? 0 : 1;
        }

        if (*win_cmd) {
            const gp::WindowSpec w = make_window(win_window, win_sigma, win_a, win_cpsi);
            const gp::SampledSignal s =
                gp::sample(w, gp::Grid(win_tmin, win_tmax, win_samples));
            gp::write_file_atomic(win_out, gp::signal_csv(s));
            write_sidecar(win_out, json{{"window", win_window},
                                        {"sigma", win_sigma},
                                        {"a", win_a},
                                        {"t_min", win_tmin},
                                        {"t_max", win_tmax},
                                        {"samples", win_samples}});
            return 0;
        }

        if (*ex4_cmd) {
            const gp::Example4Figure fig = gp::example4_figure(ex4_a);
            const int n = static_cast<int>(fig.t.size());
            std::string g_csv = "t,re,im\n", gam_csv = "t,re,im\n";
            gp::SvgSeries g_re, g_im, gam_re, gam_im;
            g_im.dashed = gam_im.dashed = true;
            g_im.color = gam_im.color = "#b03a2e";
            double g1_at_zero = 0.0;
            for (int j = 0; j < n; ++j) {
                const double t = fig.t[j];
                const gp::cdouble g = fig.g[j];
                const gp::cdouble gam = fig.gamma[j];
                if (j == 800) g1_at_zero = g.real();
                g_csv += gp::format_double(t) + ',' + gp::format_double(g.real()) + ',' +
                         gp::format_double(g.imag()) + '\n';
                gam_csv += gp::format_double(t) + ',' + gp::format_double(gam.real()) +
                           ',' + gp::format_double(gam.imag()) + '\n';
                g_re.x.push_back(t);
                g_re.y.push_back(g.real());
                g_im.x.push_back(t);
                g_im.y.push_back(g.imag());
                gam_re.x.push_back(t);
                gam_re.y.push_back(gam.real());
                gam_im.x.push_back(t);
                gam_im.y.push_back(gam.imag());
            }
            const json params{{"a", ex4_a}, {"t_range", {-8.0, 8.0}}, {"samples", n}};
            gp::write_file_atomic(ex4_dir + "/g1.csv", g_csv);
            write_sidecar(ex4_dir + "/g1.csv", params);
            gp::write_file_atomic(ex4_dir + "/gamma1.csv", gam_csv);
            write_sidecar(ex4_dir + "/gamma1.csv", params);
            if (ex4_svg) {
                const std::string svg = gp::render_svg(
                    {{"g1 (solid: re, dashed: im)", {g_re, g_im}},
                     {"gamma1 (solid: re, dashed: im)", {gam_re, gam_im}}});
                gp::write_file_atomic(ex4_dir + "/fig1.svg", svg);
                write_sidecar(ex4_dir + "/fig1.svg", params);
            }
            std::printf("g1(0) = %.6f\n", g1_at_zero);
            return 0;
        }

        if (*bast_cmd) {
            const gp::Criterion crit = gp::verify_bastiaans_pair();
            gp::Report rep = crit.report;
            emit_report(rep, bast_json);
            return rep.all_pass() ? 0 : 1;
        }

        if (*col_cmd) {
            gp::PartnerConfig cfg = gp::PartnerConfig::calibrated();
            std::vector<int> radii;
            for (int r = 32; r <= col_radius; r *= 2) radii.push_back(r);
            if (radii.empty()) radii.push_back(col_radius);
            gp::XiTable table(radii.back() + std::abs(col_n) + 1,
                              radii.back() + std::abs(col_m) + 1, cfg);
            const gp::ColumnSumProfile p =
                gp::column_sum_profile(col_n, col_m, radii, col_corrected, table);
            json out{{"n", p.n},
                     {"m", p.m},
                     {"radii", p.radii},
                     {"sums", p.sums},
                     {"corrected", p.corrected},
                     {"log_slope", p.corrected ? json(nullptr) : json(p.log_slope)}};
            const std::string text = out.dump(2) + "\n";
            if (!col_json.empty())
                gp::write_file_atomic(col_json, text);
            else
                std::fputs(text.c_str(), stdout);
            return 0;
        }

        if (*weak_cmd) {
            const gp::Criterion crit = gp::verify_weak_identity();
            emit_report(crit.report, weak_json);
            return crit.pass ? 0 : 1;
        }

        if (*verify_cmd) {
            const std::vector<gp::Criterion> criteria =
                gp::verify_group(verify_group_name);
            const json out = gp::criteria_json(criteria);
            if (!verify_json.empty())
                gp::write_file_atomic(verify_json, out.dump(2) + "\n");
            bool all = true;
            for (const auto& c : criteria) {
                std::printf("criterion %2d  %-28s %s  (%.2f s)\n", c.id, c.name.c_str(),
                            c.pass ? "pass" : "FAIL", c.seconds);
                all = all && c.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
