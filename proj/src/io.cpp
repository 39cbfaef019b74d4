// SPDX-License-Identifier: Apache-2.0
#include "treadmill/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "treadmill/errors.hpp"
#include "treadmill/numerics.hpp"

namespace treadmill::io {
namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot open '" + path + "' for writing");
    return os;
}

bool has_alpha(const std::string& line) {
    return std::any_of(line.begin(), line.end(),
                       [](unsigned char ch) { return std::isalpha(ch) != 0; });
}

std::vector<double> parse_row(const std::string& line, std::size_t lineno,
                              std::size_t expected_cols, const std::string& path) {
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        const std::string field =
            line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const char* begin = field.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin)
            throw ValidationError(path + ":" + std::to_string(lineno) +
                                  ": cannot parse '" + field + "' as a number");
        row.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (row.size() != expected_cols)
        throw ValidationError(path + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(expected_cols) + " columns, found " +
                              std::to_string(row.size()));
    return row;
}

struct Table {
    std::vector<std::vector<double>> rows;
};

Table read_table(const std::string& path, std::size_t cols) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open '" + path + "' for reading");
    Table tab;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first_content) {
            first_content = false;
            if (has_alpha(line)) continue; // header
        }
        tab.rows.push_back(parse_row(line, lineno, cols, path));
    }
    return tab;
}

} // namespace

void write_curve_csv(const std::string& path, const std::vector<double>& t,
                     const std::vector<double>& x, const std::vector<double>& y) {
    if (t.size() != x.size() || t.size() != y.size())
        throw ValidationError("write_curve_csv: array lengths differ");
    std::ofstream os = open_out(path);
    os << "t,x,y\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        os << fmt17(t[i]) << ',' << fmt17(x[i]) << ',' << fmt17(y[i]) << '\n';
    if (!os) throw ValidationError("write failed for '" + path + "'");
}

SampledCurve read_curve_csv(const std::string& path) {
    const Table tab = read_table(path, 3);
    if (tab.rows.size() < 2)
        throw ValidationError("'" + path + "' holds fewer than 2 samples");
    SampledCurve c;
    c.t.reserve(tab.rows.size());
    c.x.reserve(tab.rows.size());
    c.y.reserve(tab.rows.size());
    for (const auto& row : tab.rows) {
        c.t.push_back(row[0]);
        c.x.push_back(row[1]);
        c.y.push_back(row[2]);
    }
    for (std::size_t i = 0; i + 1 < c.t.size(); ++i)
        if (!(c.t[i] < c.t[i + 1]))
            throw ValidationError("'" + path + "': parameters must be strictly increasing");
    return c;
}

void attach_fd_derivatives(SampledCurve& c) {
    const std::size_t n = c.t.size();
    if (n < 5) throw ValidationError("finite differences need at least 5 samples");
    double diam = 0.0;
    {
        const auto [xmin, xmax] = std::minmax_element(c.x.begin(), c.x.end());
        const auto [ymin, ymax] = std::minmax_element(c.y.begin(), c.y.end());
        diam = std::max(*xmax - *xmin, *ymax - *ymin);
    }
    const double tol = 1e-8 * std::max(diam, 1e-300);
    bool closed = std::abs(c.x[0] - c.x[n - 1]) <= tol && std::abs(c.y[0] - c.y[n - 1]) <= tol;
    if (closed && n >= 6) {
        const double h = (c.t.back() - c.t.front()) / static_cast<double>(n - 1);
        for (std::size_t i = 0; closed && i + 1 < n; ++i)
            if (std::abs((c.t[i + 1] - c.t[i]) - h) > 1e-6 * std::abs(h)) closed = false;
    } else {
        closed = false;
    }
    if (closed) {
        c.tx = num::deriv1_periodic(c.t, c.x);
        c.ty = num::deriv1_periodic(c.t, c.y);
        c.sx = num::deriv2_periodic(c.t, c.x);
        c.sy = num::deriv2_periodic(c.t, c.y);
    } else {
        c.tx = num::deriv1(c.t, c.x);
        c.ty = num::deriv1(c.t, c.y);
        c.sx = num::deriv2(c.t, c.x);
        c.sy = num::deriv2(c.t, c.y);
    }
}

std::vector<double> read_scalar_csv(const std::string& path, std::size_t expected_rows) {
    const Table tab = read_table(path, 2);
    if (tab.rows.size() != expected_rows)
        throw ValidationError("'" + path + "' holds " + std::to_string(tab.rows.size()) +
                              " rows; expected " + std::to_string(expected_rows));
    std::vector<double> f;
    f.reserve(expected_rows);
    for (const auto& row : tab.rows) f.push_back(row[1]);
    return f;
}

void write_svg(const std::string& path, const std::vector<Polyline>& curves, int width,
               int height) {
    if (curves.empty()) throw ValidationError("write_svg: no curves given");
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const auto& pl : curves) {
        if (pl.x.size() != pl.y.size())
            throw ValidationError("write_svg: polyline arrays differ in length");
        if (pl.x.empty()) throw ValidationError("write_svg: empty polyline");
        for (std::size_t i = 0; i < pl.x.size(); ++i) {
            if (first) {
                xmin = xmax = pl.x[i];
                ymin = ymax = pl.y[i];
                first = false;
            } else {
                xmin = std::min(xmin, pl.x[i]);
                xmax = std::max(xmax, pl.x[i]);
                ymin = std::min(ymin, pl.y[i]);
                ymax = std::max(ymax, pl.y[i]);
            }
        }
    }
    const double pad_x = std::max(0.05 * (xmax - xmin), 1e-6);
    const double pad_y = std::max(0.05 * (ymax - ymin), 1e-6);
    xmin -= pad_x;
    xmax += pad_x;
    ymin -= pad_y;
    ymax += pad_y;

    const double margin = 10.0;
    const double avail_w = width - 2.0 * margin, avail_h = height - 2.0 * margin;
    const double scale = std::min(avail_w / (xmax - xmin), avail_h / (ymax - ymin));
    const double cx = (xmin + xmax) / 2.0, cy = (ymin + ymax) / 2.0;
    auto map_x = [&](double x) { return width / 2.0 + (x - cx) * scale; };
    auto map_y = [&](double y) { return height / 2.0 - (y - cy) * scale; };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return std::string(buf);
    };

    std::ofstream os = open_out(path);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (ymin < 0.0 && ymax > 0.0)
        os << "  <line x1=\"" << fmt(map_x(xmin)) << "\" y1=\"" << fmt(map_y(0.0)) << "\" x2=\""
           << fmt(map_x(xmax)) << "\" y2=\"" << fmt(map_y(0.0))
           << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    if (xmin < 0.0 && xmax > 0.0)
        os << "  <line x1=\"" << fmt(map_x(0.0)) << "\" y1=\"" << fmt(map_y(ymin)) << "\" x2=\""
           << fmt(map_x(0.0)) << "\" y2=\"" << fmt(map_y(ymax))
           << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    for (const auto& pl : curves) {
        os << "  <polyline fill=\"none\" stroke=\"" << pl.color
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < pl.x.size(); ++i) {
            if (i) os << ' ';
            os << fmt(map_x(pl.x[i])) << ',' << fmt(map_y(pl.y[i]));
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    if (!os) throw ValidationError("write failed for '" + path + "'");
}

void write_obj(const std::string& path, const SurfaceMesh& mesh) {
    const std::size_t ns = mesh.ns(), nt = mesh.nt();
    if (ns < 2 || nt < 2) throw ValidationError("write_obj: mesh grid too small");
    std::ofstream os = open_out(path);
    os << "# helicoidal surface mesh, " << ns << " x " << nt << " grid\n";
    for (std::size_t k = 0; k < ns * nt; ++k)
        os << "v " << fmt17(mesh.X[k]) << ' ' << fmt17(mesh.Y[k]) << ' ' << fmt17(mesh.Z[k])
           << '\n';
    const bool vn = mesh.has_normals();
    if (vn)
        for (std::size_t k = 0; k < ns * nt; ++k)
            os << "vn " << fmt17(mesh.NX[k]) << ' ' << fmt17(mesh.NY[k]) << ' '
               << fmt17(mesh.NZ[k]) << '\n';
    // Quads split into triangles wound counterclockwise around the stored
    // normal direction (the s-tangent crossed with the t-tangent).
    for (std::size_t i = 0; i + 1 < ns; ++i) {
        for (std::size_t j = 0; j + 1 < nt; ++j) {
            const std::size_t a = mesh.idx(i, j) + 1;
            const std::size_t b = mesh.idx(i + 1, j) + 1;
            const std::size_t c = mesh.idx(i + 1, j + 1) + 1;
            const std::size_t d = mesh.idx(i, j + 1) + 1;
            if (vn) {
                os << "f " << a << "//" << a << ' ' << b << "//" << b << ' ' << c << "//" << c
                   << '\n';
                os << "f " << a << "//" << a << ' ' << c << "//" << c << ' ' << d << "//" << d
                   << '\n';
            } else {
                os << "f " << a << ' ' << b << ' ' << c << '\n';
                os << "f " << a << ' ' << c << ' ' << d << '\n';
            }
        }
    }
    if (!os) throw ValidationError("write failed for '" + path + "'");
}

void write_curvature_csv(const std::string& path, const SurfaceMesh& mesh,
                         const CurvatureGrid& grid) {
    if (grid.ns != mesh.ns() || grid.nt != mesh.nt())
        throw ValidationError("write_curvature_csv: grid does not match the mesh");
    std::ofstream os = open_out(path);
    os << "s,t,H,K\n";
    for (std::size_t i = 0; i < grid.ns; ++i)
        for (std::size_t j = 0; j < grid.nt; ++j) {
            const std::size_t k = grid.idx(i, j);
            os << fmt17(mesh.s[i]) << ',' << fmt17(mesh.t[j]) << ',' << fmt17(grid.H[k]) << ','
               << fmt17(grid.K[k]) << '\n';
        }
    if (!os) throw ValidationError("write failed for '" + path + "'");
}

} // namespace treadmill::io
