// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "treadmill/curve.hpp"
#include "treadmill/helicoid.hpp"

namespace treadmill::io {

/// Writes a `t,x,y` CSV (header line included). Values are printed with 17
/// significant digits so a write/read cycle reproduces every double bit for
/// bit.
void write_curve_csv(const std::string& path, const std::vector<double>& t,
                     const std::vector<double>& x, const std::vector<double>& y);

/// Reads a `t,x,y` CSV produced by write_curve_csv (or by hand). Only the
/// sample arrays are filled; call attach_fd_derivatives to supply tangents
/// and second derivatives. Throws ValidationError on malformed input.
SampledCurve read_curve_csv(const std::string& path);

/// Fills tx/ty (first derivatives) and sx/sy (second derivatives) by
/// five-point finite differences. If the first and last points coincide
/// (relative to the bounding-box diameter) and the grid is uniform, the
/// curve is treated as closed and periodic stencils are used; otherwise the
/// one-sided open-curve stencils apply, which tolerate mildly nonuniform
/// grids.
void attach_fd_derivatives(SampledCurve& c);

/// Reads a two-column `t,f` CSV carrying one scalar per curve sample (used
/// for externally supplied companion functions). The row count must equal
/// expected_rows. Returns the second column.
std::vector<double> read_scalar_csv(const std::string& path, std::size_t expected_rows);

struct Polyline {
    std::vector<double> x, y;
    std::string color = "#1f77b4";
};

/// Renders polylines into a standalone SVG with equal-aspect scaling and
/// light coordinate axes through the origin.
void write_svg(const std::string& path, const std::vector<Polyline>& curves,
               int width = 800, int height = 600);

/// Writes a Wavefront OBJ triangulation of the mesh grid. When normals are
/// present they are emitted as `vn` records and each quad is split into two
/// triangles wound counterclockwise around the stored normal.
void write_obj(const std::string& path, const SurfaceMesh& mesh);

/// Writes an `s,t,H,K` CSV for a curvature grid evaluated on a mesh; grid
/// entries flagged invalid are written as nan.
void write_curvature_csv(const std::string& path, const SurfaceMesh& mesh,
                         const CurvatureGrid& grid);

} // namespace treadmill::io
