// SPDX-License-Identifier: Apache-2.0
// File formats plus end-to-end runs of the command-line tool (subprocesses).

#include <sys/wait.h>
#include <unistd.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "helpers.hpp"
#include "treadmill/errors.hpp"
#include "treadmill/generators.hpp"
#include "treadmill/helicoid.hpp"
#include "treadmill/io.hpp"
#include "treadmill/numerics.hpp"

using namespace treadmill;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("treadmill_tests_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct CmdResult {
    int code = -1;
    std::string out, err;
};

CmdResult run_cli(const std::string& args) {
    const fs::path so = test_dir() / "stdout.txt";
    const fs::path se = test_dir() / "stderr.txt";
    const std::string cmd =
        std::string(CLI_BIN) + " " + args + " >" + so.string() + " 2>" + se.string();
    const int rc = std::system(cmd.c_str());
    CmdResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(so);
    r.err = slurp(se);
    return r;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

/// Pull "key = value" out of a verify report.
double report_value(const std::string& report, const std::string& key) {
    const std::string tag = key + " = ";
    const std::size_t pos = report.find(tag);
    REQUIRE(pos != std::string::npos);
    return std::strtod(report.c_str() + pos + tag.size(), nullptr);
}

void write_circle_csv(const fs::path& p, double r, std::size_t n) {
    const auto t = num::linspace(0.0, 2.0 * std::numbers::pi, n);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = r * std::cos(t[i]);
        y[i] = r * std::sin(t[i]);
    }
    x[n - 1] = x[0]; // close the loop exactly so periodic stencils engage
    y[n - 1] = y[0];
    io::write_curve_csv(p.string(), t, x, y);
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) return false;
    return true;
}

} // namespace

TEST_CASE("curve CSV survives a write/read cycle bit for bit") {
    const fs::path p = test_dir() / "roundtrip.csv";
    const std::vector<double> t{-2.0, -1.0, 0.25, 1.0 / 3.0, 2.5, 1e4};
    const std::vector<double> x{0.1, -1e10, std::numbers::pi, 2.5e-19, 0.0, -0.0};
    const std::vector<double> y{1.0 / 3.0, 7.0, -0.1, 1e-300, 123456.789, 1e17};
    io::write_curve_csv(p.string(), t, x, y);
    const SampledCurve c = io::read_curve_csv(p.string());
    CHECK(bit_equal(c.t, t));
    CHECK(bit_equal(c.x, x));
    CHECK(bit_equal(c.y, y));
}

TEST_CASE("curve CSV accepts headerless files and rejects malformed ones") {
    const fs::path ok = test_dir() / "raw.csv";
    std::ofstream(ok) << "0,1,2\n1,3,4\n2,5,6\n";
    const SampledCurve c = io::read_curve_csv(ok.string());
    CHECK(c.size() == 3);
    CHECK(c.y[2] == 6.0);

    const fs::path bad_cols = test_dir() / "cols.csv";
    std::ofstream(bad_cols) << "0,1\n1,2\n";
    CHECK_THROWS_AS(io::read_curve_csv(bad_cols.string()), ValidationError);

    const fs::path bad_tok = test_dir() / "tok.csv";
    std::ofstream(bad_tok) << "t,x,y\n0,1,2\nzap,3,4\n";
    CHECK_THROWS_AS(io::read_curve_csv(bad_tok.string()), ValidationError);

    const fs::path bad_t = test_dir() / "mono.csv";
    std::ofstream(bad_t) << "0,1,2\n2,3,4\n1,5,6\n";
    CHECK_THROWS_AS(io::read_curve_csv(bad_t.string()), ValidationError);

    CHECK_THROWS_AS(io::read_curve_csv((test_dir() / "missing.csv").string()), ValidationError);
}

TEST_CASE("finite-difference attachment: periodic for loops, one-sided otherwise") {
    const fs::path p = test_dir() / "circle_fd.csv";
    write_circle_csv(p, 1.0, 513);
    SampledCurve c = io::read_curve_csv(p.string());
    io::attach_fd_derivatives(c);
    REQUIRE(c.has_seconds());
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        worst = std::max(worst, std::abs(c.tx[i] + std::sin(c.t[i])));
        worst = std::max(worst, std::abs(c.ty[i] - std::cos(c.t[i])));
    }
    CHECK(worst < 1e-6); // endpoints included: the periodic stencil has no edge loss

    SampledCurve par;
    par.t = num::linspace(-1.0, 1.0, 51);
    par.x = par.t;
    par.y.resize(par.t.size());
    for (std::size_t i = 0; i < par.t.size(); ++i) par.y[i] = par.t[i] * par.t[i];
    io::attach_fd_derivatives(par);
    for (std::size_t i = 0; i < par.t.size(); ++i) {
        CHECK(std::abs(par.tx[i] - 1.0) < 1e-10);
        CHECK(std::abs(par.ty[i] - 2.0 * par.t[i]) < 1e-10);
        CHECK(std::abs(par.sy[i] - 2.0) < 1e-8);
    }

    // Open curves tolerate mildly nonuniform grids (local polynomial fit).
    SampledCurve warped = par;
    warped.t[10] += 0.02;
    warped.x = warped.t;
    for (std::size_t i = 0; i < warped.t.size(); ++i) warped.y[i] = warped.t[i] * warped.t[i];
    warped.tx.clear();
    warped.ty.clear();
    warped.sx.clear();
    warped.sy.clear();
    io::attach_fd_derivatives(warped);
    for (std::size_t i = 0; i < warped.t.size(); ++i)
        CHECK(std::abs(warped.ty[i] - 2.0 * warped.t[i]) < 1e-9);
}

TEST_CASE("scalar CSV: round trip and row-count enforcement") {
    const fs::path p = test_dir() / "scalar.csv";
    std::ofstream(p) << "t,f\n0,0.5\n1,0.25\n2,0.125\n";
    const auto f = io::read_scalar_csv(p.string(), 3);
    REQUIRE(f.size() == 3);
    CHECK(f[2] == 0.125);
    CHECK_THROWS_AS(io::read_scalar_csv(p.string(), 4), ValidationError);
}

TEST_CASE("SVG output carries one polyline per curve") {
    const fs::path p = test_dir() / "two.svg";
    io::Polyline a, b;
    a.x = {0.0, 1.0, 2.0};
    a.y = {0.0, 1.0, 0.0};
    b.x = {0.0, 1.0};
    b.y = {1.0, -1.0};
    b.color = "#d62728";
    io::write_svg(p.string(), {a, b}, 640, 480);
    const std::string svg = slurp(p);
    CHECK(count_occurrences(svg, "<polyline") == 2);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("#d62728") != std::string::npos);
    CHECK_THROWS_AS(io::write_svg((test_dir() / "none.svg").string(), {}), ValidationError);
}

TEST_CASE("OBJ output: one vertex per node, two triangles per quad") {
    MinimalSpec sp;
    sp.n = 12;
    sp.s_span = 2.0;
    const SampledCurve prof = minimal_profile(sp);
    SurfaceMesh mesh = immerse(prof, {1.0}, 0.0, 1.0, 5);
    const fs::path bare = test_dir() / "bare.obj";
    io::write_obj(bare.string(), mesh);
    const std::string obj = slurp(bare);
    CHECK(count_occurrences(obj, "\nv ") + (obj.rfind("v ", 0) == 0 ? 1 : 0) == 12 * 5);
    CHECK(count_occurrences(obj, "\nf ") == 2 * 11 * 4);
    CHECK(count_occurrences(obj, "vn ") == 0);

    gauss_map(prof, turning_angle(prof), ts(prof), {1.0}, mesh);
    const fs::path withn = test_dir() / "normals.obj";
    io::write_obj(withn.string(), mesh);
    const std::string objn = slurp(withn);
    CHECK(count_occurrences(objn, "\nvn ") == 12 * 5);
    CHECK(objn.find("//") != std::string::npos);
}

TEST_CASE("cli: treadmill transform of a circle is the constant (0, 1)") {
    const fs::path in = test_dir() / "circle.csv";
    const fs::path out = test_dir() / "circle_ts.csv";
    write_circle_csv(in, 1.0, 257);
    const CmdResult r = run_cli("ts --in " + in.string() + " --out " + out.string());
    REQUIRE(r.code == 0);
    const SampledCurve g = io::read_curve_csv(out.string());
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(std::abs(g.x[i]) < 1e-6);
        CHECK(std::abs(g.y[i] - 1.0) < 1e-6);
    }
}

TEST_CASE("cli: phi-ts at zero angle matches ts byte for byte") {
    const fs::path in = test_dir() / "loop.csv";
    const fs::path o1 = test_dir() / "plain.csv";
    const fs::path o2 = test_dir() / "phi0.csv";
    write_circle_csv(in, 1.4, 129);
    REQUIRE(run_cli("ts --in " + in.string() + " --out " + o1.string()).code == 0);
    REQUIRE(run_cli("phi-ts --phi 0 --in " + in.string() + " --out " + o2.string()).code == 0);
    CHECK(slurp(o1) == slurp(o2));
}

TEST_CASE("cli: inverting a full vertical line fails with the range diagnostic") {
    const fs::path in = test_dir() / "vertical_line.csv";
    {
        const auto t = num::linspace(0.0, 1.0, 101);
        std::vector<double> z(101, 1.0);
        const auto w = num::linspace(-1.0, 1.0, 101);
        io::write_curve_csv(in.string(), t, z, w);
    }
    const fs::path out = test_dir() / "nope.csv";
    const CmdResult r = run_cli("invert --in " + in.string() + " --out " + out.string());
    CHECK(r.code == 3);
    CHECK(r.err.find("range") != std::string::npos);
}

TEST_CASE("cli: inverting a moving y-axis trace names the obstruction") {
    const fs::path in = test_dir() / "axis_semiline.csv";
    {
        const auto t = num::linspace(0.0, 1.0, 101);
        const std::vector<double> z(101, 0.0);
        const auto w = num::linspace(-2.0, -1.0, 101);
        io::write_curve_csv(in.string(), t, z, w);
    }
    const CmdResult r = run_cli("invert --in " + in.string() + " --out " +
                                (test_dir() / "nope2.csv").string());
    CHECK(r.code == 3);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli: constant traces invert only with an explicit companion file") {
    const std::size_t n = 65;
    const fs::path in = test_dir() / "const.csv";
    const fs::path fcsv = test_dir() / "fvals.csv";
    const fs::path out = test_dir() / "const_curve.csv";
    {
        const auto t = num::linspace(0.0, 2.0 * std::numbers::pi, n);
        const std::vector<double> z(n, 0.0), w(n, 1.0);
        io::write_curve_csv(in.string(), t, z, w);
        std::ofstream fs_(fcsv);
        fs_ << "t,f\n";
        for (double tv : t) fs_ << tv << ",1\n";
    }
    CHECK(run_cli("invert --in " + in.string() + " --out " + out.string()).code == 3);
    const CmdResult r = run_cli("invert --in " + in.string() + " --out " + out.string() +
                                " --f-override " + fcsv.string());
    REQUIRE(r.code == 0);
    const SampledCurve alpha = io::read_curve_csv(out.string());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        CHECK(std::abs(std::hypot(alpha.x[i], alpha.y[i]) - 1.0) < 1e-9);
}

TEST_CASE("cli: generated minimal profile passes its own verification") {
    const fs::path prof = test_dir() / "prof_minimal.csv";
    const fs::path side = test_dir() / "prof_minimal.json";
    const CmdResult g = run_cli("gen-minimal --w 1 --M 1 --n 2001 --out " + prof.string() +
                                " --sidecar " + side.string());
    REQUIRE(g.code == 0);
    const CmdResult v = run_cli("verify --in " + prof.string() + " --w 1");
    REQUIRE(v.code == 0);
    CHECK(report_value(v.out, "max|H|") < 1e-6);
    CHECK(report_value(v.out, "minimal_conserved_spread") < 1e-8);
    const auto j = nlohmann::json::parse(slurp(side));
    CHECK(j.at("command") == "gen-minimal");
    CHECK(j.at("max_abs_H").get<double>() < 1e-6);
}

TEST_CASE("cli: mean-curvature-one pipeline, including the mesh report") {
    const fs::path prof = test_dir() / "prof_cmc.csv";
    REQUIRE(run_cli("gen-cmc --w 1 --M 1 --n 4001 --out " + prof.string()).code == 0);
    const fs::path curv = test_dir() / "cmc_curv.csv";
    const CmdResult v = run_cli("verify --in " + prof.string() +
                                " --w 1 --curv-out " + curv.string() + " --nt 48 --tmax 0.5");
    REQUIRE(v.code == 0);
    CHECK(report_value(v.out, "max|H-1|") < 1e-3);
    CHECK(report_value(v.out, "cmc_level_spread") < 1e-3);
    CHECK(report_value(v.out, "mesh_max|H-1|") < 5e-3);
    const std::string head = slurp(curv).substr(0, 16);
    CHECK(head.rfind("s,t,H,K", 0) == 0);
}

TEST_CASE("cli: flat profile generation and byte-identical reruns") {
    const fs::path p1 = test_dir() / "flat1.csv";
    const fs::path p2 = test_dir() / "flat2.csv";
    REQUIRE(run_cli("gen-flat --c 1 --y0 -2 --y1 -1 --n 301 --out " + p1.string()).code == 0);
    REQUIRE(run_cli("gen-flat --c 1 --y0 -2 --y1 -1 --n 301 --out " + p2.string()).code == 0);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(run_cli("gen-flat --c 0 --out " + (test_dir() / "flat0.csv").string()).code == 2);
    CHECK(run_cli("gen-flat --y0 -1 --y1 1 --out " + (test_dir() / "flatx.csv").string()).code == 3);
}

TEST_CASE("cli: mesh export writes normals for unit-speed profiles") {
    const fs::path prof = test_dir() / "prof_mesh.csv";
    REQUIRE(run_cli("gen-minimal --n 101 --span 3 --out " + prof.string()).code == 0);
    const fs::path obj = test_dir() / "mesh.obj";
    const CmdResult r = run_cli("mesh --in " + prof.string() + " --out " + obj.string() +
                                " --w 1 --tmin 0 --tmax 1 --nt 17");
    REQUIRE(r.code == 0);
    const std::string o = slurp(obj);
    CHECK(count_occurrences(o, "\nvn ") == 101 * 17);
}

TEST_CASE("cli: rolling a circle centered at the origin traces y = r") {
    const fs::path in = test_dir() / "wheel.csv";
    write_circle_csv(in, 1.0, 361);
    const fs::path out = test_dir() / "wheel_roll.csv";
    REQUIRE(run_cli("roll --in " + in.string() + " --out " + out.string()).code == 0);
    const SampledCurve tr = io::read_curve_csv(out.string());
    for (std::size_t i = 0; i < tr.size(); ++i) CHECK(std::abs(tr.y[i] - 1.0) < 1e-6);
}

TEST_CASE("cli: plotting rejects empty input but accepts overlays") {
    const fs::path empty = test_dir() / "empty.csv";
    std::ofstream(empty).close();
    const fs::path svg = test_dir() / "plot.svg";
    CHECK(run_cli("plot --in " + empty.string() + " --out " + svg.string()).code == 2);

    const fs::path a = test_dir() / "plot_a.csv";
    const fs::path b = test_dir() / "plot_b.csv";
    write_circle_csv(a, 1.0, 65);
    write_circle_csv(b, 0.5, 65);
    const CmdResult r = run_cli("plot --in " + a.string() + " --in " + b.string() + " --out " +
                                svg.string());
    REQUIRE(r.code == 0);
    CHECK(count_occurrences(slurp(svg), "<polyline") == 2);
}

TEST_CASE("cli: argument errors exit with the validation code") {
    CHECK(run_cli("ts --in nowhere.csv").code == 2);        // missing --out
    CHECK(run_cli("warp --in a --out b").code == 2);        // unknown subcommand
    CHECK(run_cli("ts --in nowhere.csv --out x.csv").code == 2); // unreadable input
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("gen-minimal --help").code == 0);
}
