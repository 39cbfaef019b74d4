// SPDX-License-Identifier: Apache-2.0
// Command-line front end: treadmill transforms, inversion, rolling, profile
// generators, mesh export, and curvature/residual reports over the shared
// t,x,y CSV format.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "treadmill/curve.hpp"
#include "treadmill/errors.hpp"
#include "treadmill/generators.hpp"
#include "treadmill/helicoid.hpp"
#include "treadmill/inverse.hpp"
#include "treadmill/io.hpp"
#include "treadmill/kernels.hpp"
#include "treadmill/log.hpp"
#include "treadmill/numerics.hpp"
#include "treadmill/roll.hpp"
#include "treadmill/treadmill.hpp"

namespace {

using nlohmann::json;
using namespace treadmill;

SampledCurve load_curve(const std::string& path) {
    SampledCurve c = io::read_curve_csv(path);
    io::attach_fd_derivatives(c);
    validate_curve(c);
    return c;
}

void write_sidecar(const std::string& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot open '" + path + "' for writing");
    os << j.dump(2) << '\n';
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

struct Stats {
    double min, max;
};

Stats min_max(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return {*lo, *hi};
}

bool near_unit_speed(const SampledCurve& c) {
    const std::vector<double> sp = speeds(c);
    const Stats s = min_max(sp);
    return std::abs(s.min - 1.0) <= 1e-6 && std::abs(s.max - 1.0) <= 1e-6;
}

/// Conserved quantity of the minimal-surface family: xi2/sqrt(1+w^2 xi1^2).
std::vector<double> minimal_conserved(const TSCurve& g, double w) {
    std::vector<double> q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        q[i] = g.w[i] / std::sqrt(1.0 + w * w * g.z[i] * g.z[i]);
    return q;
}

void report_line(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    std::cout << key << " = " << buf << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar-curve treadmill geometry toolkit"};
    app.require_subcommand(1);

    std::int64_t seed = 0;
    app.add_option("--seed", seed,
                   "seed recorded in sidecars for reproducibility (commands are deterministic)");

    // Shared option storage. Each subcommand binds the subset it uses.
    std::string in_path, out_path, sidecar_path, f_override_path;
    std::vector<std::string> in_paths;
    double w = 1.0, M = 1.0, phi = 0.0, offset = 0.0;
    double span = 6.0, c_abscissa = 1.0, y0 = -2.0, y1 = -1.0;
    double tmin = 0.0, tmax = 2.0 * std::numbers::pi;
    std::size_t n = 1000, nt = 200;
    std::string branch = "upper", curv_out;
    int width = 800, height = 600;

    auto add_io = [&](CLI::App* sub, bool needs_out = true) {
        sub->add_option("--in", in_path, "input curve CSV (t,x,y)")->required();
        if (needs_out) sub->add_option("--out", out_path, "output CSV path")->required();
        sub->add_option("--sidecar", sidecar_path, "also write a JSON sidecar here");
    };

    // ---- ts ----------------------------------------------------------------
    auto* cmd_ts = app.add_subcommand("ts", "treadmill transform of a curve");
    add_io(cmd_ts);
    cmd_ts->callback([&] {
        const SampledCurve c = load_curve(in_path);
        const TSCurve g = ts(c);
        io::write_curve_csv(out_path, g.t, g.z, g.w);
        if (!sidecar_path.empty())
            write_sidecar(sidecar_path, json{{"command", "ts"},
                                             {"in", in_path},
                                             {"out", out_path},
                                             {"seed", seed},
                                             {"samples", g.size()}});
    });

    // ---- phi-ts ------------------------------------------------------------
    auto* cmd_phits = app.add_subcommand("phi-ts", "phi-treadmill with a constant angle");
    add_io(cmd_phits);
    cmd_phits->add_option("--phi", phi, "constant pinned-tangent angle in radians")
        ->capture_default_str();
    cmd_phits->callback([&] {
        const SampledCurve c = load_curve(in_path);
        const std::vector<double> phis(c.size(), phi);
        const TSCurve g = phi_ts(c, phis);
        io::write_curve_csv(out_path, g.t, g.z, g.w);
        if (!sidecar_path.empty())
            write_sidecar(sidecar_path, json{{"command", "phi-ts"},
                                             {"in", in_path},
                                             {"out", out_path},
                                             {"seed", seed},
                                             {"phi", phi},
                                             {"samples", g.size()}});
    });

    // ---- invert ------------------------------------------------------------
    auto* cmd_invert = app.add_subcommand("invert", "reconstruct a curve from its treadmill image");
    add_io(cmd_invert);
    cmd_invert->add_option("--f-override", f_override_path,
                           "CSV (t,f) supplying the companion function explicitly");
    cmd_invert->add_option("--offset", offset,
                           "antiderivative constant (rotates the result)")
        ->capture_default_str();
    cmd_invert->callback([&] {
        const SampledCurve raw = io::read_curve_csv(in_path);
        TSCurve g;
        g.t = raw.t;
        g.z = raw.x;
        g.w = raw.y;
        g.speed.assign(g.t.size(), 1.0);
        InvertOptions opt;
        opt.antiderivative_offset = offset;
        if (!f_override_path.empty())
            opt.f_override = io::read_scalar_csv(f_override_path, g.size());
        const InverseResult inv = invert(g, opt);
        io::write_curve_csv(out_path, inv.alpha.t, inv.alpha.x, inv.alpha.y);
        if (!sidecar_path.empty())
            write_sidecar(sidecar_path,
                          json{{"command", "invert"},
                               {"in", in_path},
                               {"out", out_path},
                               {"seed", seed},
                               {"samples", g.size()},
                               {"min_range_margin", inv.range.min_margin},
                               {"antiderivative_offset", offset}});
    });

    // ---- roll --------------------------------------------------------------
    auto* cmd_roll = app.add_subcommand("roll", "trace of the origin as the curve rolls on the x-axis");
    add_io(cmd_roll);
    cmd_roll->callback([&] {
        const SampledCurve c = load_curve(in_path);
        const RollTrace tr = roll(c);
        io::write_curve_csv(out_path, tr.t, tr.x, tr.y);
        if (!sidecar_path.empty())
            write_sidecar(sidecar_path, json{{"command", "roll"},
                                             {"in", in_path},
                                             {"out", out_path},
                                             {"seed", seed},
                                             {"arc_length", tr.arclens.back()},
                                             {"samples", tr.t.size()}});
    });

    // ---- gen-minimal -------------------------------------------------------
    auto* cmd_genmin = app.add_subcommand("gen-minimal", "profile of a minimal helicoidal surface");
    cmd_genmin->add_option("--out", out_path, "output CSV path")->required();
    cmd_genmin->add_option("--w", w, "pitch")->capture_default_str();
    cmd_genmin->add_option("--M", M, "conserved treadmill parameter")->capture_default_str();
    cmd_genmin->add_option("--span", span, "arc-length extent")->capture_default_str();
    cmd_genmin->add_option("--branch", branch, "hyperbola branch: upper|lower")
        ->check(CLI::IsMember({"upper", "lower"}))
        ->capture_default_str();
    std::size_t n_gen = 4000;
    cmd_genmin->add_option("--n", n_gen, "sample count")->capture_default_str();
    cmd_genmin->add_option("--sidecar", sidecar_path, "also write a JSON sidecar here");
    cmd_genmin->callback([&] {
        MinimalSpec spec;
        spec.w = w;
        spec.M = M;
        spec.s_span = span;
        spec.upper = branch == "upper";
        spec.n = n_gen;
        const SampledCurve prof = minimal_profile(spec);
        io::write_curve_csv(out_path, prof.t, prof.x, prof.y);
        if (!sidecar_path.empty()) {
            const TSCurve g = ts(prof);
            const Stats cons = min_max(minimal_conserved(g, w));
            const double maxH = max_abs(mean_curvature_analytic(prof, {w}));
            write_sidecar(sidecar_path, json{{"command", "gen-minimal"},
                                             {"out", out_path},
                                             {"seed", seed},
                                             {"w", w},
                                             {"M", M},
                                             {"span", span},
                                             {"branch", branch},
                                             {"n", n_gen},
                                             {"conserved_spread", cons.max - cons.min},
                                             {"max_abs_H", maxH}});
        }
    });

    // ---- gen-cmc -----------------------------------------------------------
    auto* cmd_gencmc = app.add_subcommand("gen-cmc", "profile of a mean-curvature-one helicoidal surface");
    cmd_gencmc->add_option("--out", out_path, "output CSV path")->required();
    cmd_gencmc->add_option("--w", w, "pitch")->capture_default_str();
    cmd_gencmc->add_option("--M", M, "level parameter (> -1/4)")->capture_default_str();
    std::size_t n_cmc = 4000;
    cmd_gencmc->add_option("--n", n_cmc, "sample count")->capture_default_str();
    cmd_gencmc->add_option("--sidecar", sidecar_path, "also write a JSON sidecar here");
    cmd_gencmc->callback([&] {
        CMCSpec spec;
        spec.w = w;
        spec.M = M;
        spec.n = n_cmc;
        const SampledCurve prof = cmc_profile(spec);
        io::write_curve_csv(out_path, prof.t, prof.x, prof.y);
        if (!sidecar_path.empty()) {
            std::vector<double> H = mean_curvature_analytic(prof, {w});
            for (double& h : H) h -= 1.0;
            const double resid = max_abs(cmc_residual(ts(prof), {w}, M));
            write_sidecar(sidecar_path, json{{"command", "gen-cmc"},
                                             {"out", out_path},
                                             {"seed", seed},
                                             {"w", w},
                                             {"M", M},
                                             {"n", n_cmc},
                                             {"max_abs_H_minus_1", max_abs(H)},
                                             {"max_abs_level_residual", resid}});
        }
    });

    // ---- gen-flat ----------------------------------------------------------
    auto* cmd_genflat = app.add_subcommand("gen-flat", "profile of a flat helicoidal surface");
    cmd_genflat->add_option("--out", out_path, "output CSV path")->required();
    cmd_genflat->add_option("--c", c_abscissa, "trace abscissa (nonzero)")->capture_default_str();
    cmd_genflat->add_option("--y0", y0, "trace ordinate start")->capture_default_str();
    cmd_genflat->add_option("--y1", y1, "trace ordinate end")->capture_default_str();
    cmd_genflat->add_option("--n", n, "sample count")->capture_default_str();
    cmd_genflat->add_option("--sidecar", sidecar_path, "also write a JSON sidecar here");
    cmd_genflat->callback([&] {
        FlatSpec spec;
        spec.c = c_abscissa;
        spec.y0 = y0;
        spec.y1 = y1;
        spec.n = n;
        const SampledCurve prof = flat_profile(spec);
        io::write_curve_csv(out_path, prof.t, prof.x, prof.y);
        if (!sidecar_path.empty())
            write_sidecar(sidecar_path, json{{"command", "gen-flat"},
                                             {"out", out_path},
                                             {"seed", seed},
                                             {"c", c_abscissa},
                                             {"y0", y0},
                                             {"y1", y1},
                                             {"n", n}});
    });

    // ---- mesh --------------------------------------------------------------
    auto* cmd_mesh = app.add_subcommand("mesh", "sweep a profile into a helicoidal surface OBJ");
    cmd_mesh->add_option("--in", in_path, "input profile CSV (t,x,y)")->required();
    cmd_mesh->add_option("--out", out_path, "output OBJ path")->required();
    cmd_mesh->add_option("--w", w, "pitch")->capture_default_str();
    cmd_mesh->add_option("--tmin", tmin, "screw parameter start")->capture_default_str();
    cmd_mesh->add_option("--tmax", tmax, "screw parameter end")->capture_default_str();
    cmd_mesh->add_option("--nt", nt, "screw sample count")->capture_default_str();
    cmd_mesh->callback([&] {
        const SampledCurve prof = load_curve(in_path);
        SurfaceMesh mesh = immerse(prof, {w}, tmin, tmax, nt);
        if (near_unit_speed(prof)) {
            gauss_map(prof, turning_angle(prof), ts(prof), {w}, mesh);
        } else {
            log::info("profile is not unit-speed; OBJ written without normals");
        }
        io::write_obj(out_path, mesh);
    });

    // ---- verify ------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "curvature and residual report for a profile");
    cmd_verify->add_option("--in", in_path, "input profile CSV (t,x,y)")->required();
    cmd_verify->add_option("--w", w, "pitch")->capture_default_str();
    cmd_verify->add_option("--curv-out", curv_out, "write mesh finite-difference H,K to this CSV");
    cmd_verify->add_option("--tmin", tmin, "screw parameter start (mesh report)")->capture_default_str();
    cmd_verify->add_option("--tmax", tmax, "screw parameter end (mesh report)")->capture_default_str();
    cmd_verify->add_option("--nt", nt, "screw sample count (mesh report)")->capture_default_str();
    cmd_verify->callback([&] {
        const SampledCurve prof = load_curve(in_path);
        const std::vector<double> sp = speeds(prof);
        const Stats spst = min_max(sp);
        report_line("samples", static_cast<double>(prof.size()));
        report_line("speed_min", spst.min);
        report_line("speed_max", spst.max);
        report_line("arc_length", arc_length(prof));

        const TSCurve g = ts(prof);
        if (near_unit_speed(prof)) {
            const std::vector<double> H = mean_curvature_analytic(prof, {w});
            std::vector<double> Hm1 = H;
            for (double& h : Hm1) h -= 1.0;
            report_line("max|H|", max_abs(H));
            report_line("max|H-1|", max_abs(Hm1));
            const FundForms ff = fundamental_forms_analytic(prof, {w});
            std::vector<double> K(prof.size());
            for (std::size_t i = 0; i < prof.size(); ++i) {
                const double den = ff.E[i] * ff.G[i] - ff.F[i] * ff.F[i];
                K[i] = (ff.e[i] * ff.g[i] - ff.f[i] * ff.f[i]) / den;
            }
            report_line("max|K|", max_abs(K));
        } else {
            std::cout << "profile is not unit-speed; analytic curvature report skipped\n";
        }

        const Stats cons = min_max(minimal_conserved(g, w));
        report_line("minimal_conserved_spread", cons.max - cons.min);
        std::vector<double> level = cmc_residual(g, {w}, 0.0); // level values themselves
        double mean = 0.0;
        for (double v : level) mean += v;
        mean /= static_cast<double>(level.size());
        double spread = 0.0;
        for (double v : level) spread = std::max(spread, std::abs(v - mean));
        report_line("cmc_level_fit_M", mean);
        report_line("cmc_level_spread", spread);
        const Stats zst = min_max(g.z);
        report_line("flat_abscissa_spread", zst.max - zst.min);

        if (!curv_out.empty()) {
            const SurfaceMesh mesh = immerse(prof, {w}, tmin, tmax, nt);
            const CurvatureGrid grid = curvatures_fd(mesh);
            io::write_curvature_csv(curv_out, mesh, grid);
            double maxH = 0.0, maxHm1 = 0.0, maxK = 0.0;
            for (std::size_t k = 0; k < grid.H.size(); ++k) {
                if (!grid.valid[k]) continue;
                maxH = std::max(maxH, std::abs(grid.H[k]));
                maxHm1 = std::max(maxHm1, std::abs(grid.H[k] - 1.0));
                maxK = std::max(maxK, std::abs(grid.K[k]));
            }
            report_line("mesh_max|H|", maxH);
            report_line("mesh_max|H-1|", maxHm1);
            report_line("mesh_max|K|", maxK);
        }
    });

    // ---- plot --------------------------------------------------------------
    auto* cmd_plot = app.add_subcommand("plot", "render curve CSVs into an SVG");
    cmd_plot->add_option("--in", in_paths, "input curve CSVs (repeatable)")->required();
    cmd_plot->add_option("--out", out_path, "output SVG path")->required();
    cmd_plot->add_option("--width", width, "image width in px")->capture_default_str();
    cmd_plot->add_option("--height", height, "image height in px")->capture_default_str();
    cmd_plot->callback([&] {
        static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
        std::vector<io::Polyline> pls;
        for (std::size_t i = 0; i < in_paths.size(); ++i) {
            const SampledCurve c = io::read_curve_csv(in_paths[i]);
            io::Polyline pl;
            pl.x = c.x;
            pl.y = c.y;
            pl.color = kColors[i % (sizeof kColors / sizeof kColors[0])];
            pls.push_back(std::move(pl));
        }
        io::write_svg(out_path, pls, width, height);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints message / help text
        return code == 0 ? 0 : 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const EmptyLevelSet& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
