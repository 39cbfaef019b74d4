// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "treadmill/curve.hpp"
#include "treadmill/treadmill.hpp"

namespace treadmill {

struct HelicoidalParams {
    double w = 1.0; ///< pitch, > 0
};

/// Helicoidal surface grid: row-major over (s, t) with s the profile
/// parameter and t the screw parameter. Normals are optional (gauss_map).
struct SurfaceMesh {
    std::vector<double> s, t;
    std::vector<double> X, Y, Z;
    std::vector<double> NX, NY, NZ;

    std::size_t ns() const { return s.size(); }
    std::size_t nt() const { return t.size(); }
    std::size_t idx(std::size_t i, std::size_t j) const { return i * t.size() + j; }
    bool has_normals() const { return !NX.empty(); }
    Vec3 point(std::size_t i, std::size_t j) const {
        const std::size_t k = idx(i, j);
        return {X[k], Y[k], Z[k]};
    }
    Vec3 normal(std::size_t i, std::size_t j) const {
        const std::size_t k = idx(i, j);
        return {NX[k], NY[k], NZ[k]};
    }
};

/// Sweep the profile (x(s), z(s)) into the screw motion of pitch w:
/// (s, t) -> (x cos wt + z sin wt, t, -x sin wt + z cos wt),
/// with nt >= 2 uniform screw parameters on [t0, t1].
SurfaceMesh immerse(const SampledCurve& profile, HelicoidalParams p, double t0, double t1,
                    std::size_t nt);

/// Attach the unit normal field
/// nu = (sin(wt - theta), -w xi1, cos(wt - theta)) / sqrt(1 + w^2 xi1^2)
/// to the mesh; theta is the profile's turning angle and (xi1, xi2) its
/// treadmill image. The finite-difference normal of immerse() agrees with nu
/// in orientation. profile must be unit-speed.
void gauss_map(const SampledCurve& profile, const TurningAngle& theta, const TSCurve& sled,
               HelicoidalParams p, SurfaceMesh& mesh);

/// Fundamental forms of the helicoidal surface along a unit-speed profile
/// (they do not depend on t): E = 1, F = -w xi2, G = 1 + w^2(xi1^2 + xi2^2),
/// e = theta'/q, f = -w/q, g = w^2 xi2 / q with q = sqrt(1 + w^2 xi1^2).
struct FundForms {
    std::vector<double> E, F, G; ///< first form
    std::vector<double> e, f, g; ///< second form
};
FundForms fundamental_forms_analytic(const SampledCurve& profile, HelicoidalParams p);

/// H(s) = (-w^2 xi2 + theta' (1 + w^2 (xi1^2 + xi2^2))) / (2 (1 + w^2 xi1^2)^{3/2})
/// for a unit-speed profile; theta' = x'z'' - z'x'' from the profile's second
/// derivatives (attached when present, grid differences otherwise).
std::vector<double> mean_curvature_analytic(const SampledCurve& profile, HelicoidalParams p);

/// Mean and Gauss curvature from central finite differences on the mesh
/// itself (interior nodes only; `valid` marks them). The normal is the
/// normalized cross product mesh_s x mesh_t, which matches gauss_map's
/// orientation. Throws DegenerateMetric when EG - F^2 <= 0 at an interior
/// node.
struct CurvatureGrid {
    std::vector<double> H, K;
    std::vector<std::uint8_t> valid;
    std::size_t ns = 0, nt = 0;
    std::size_t idx(std::size_t i, std::size_t j) const { return i * nt + j; }
};
CurvatureGrid curvatures_fd(const SurfaceMesh& mesh);

/// Level residual of the CMC-one condition on a trace:
/// r = z^2 + w^2 - w/sqrt(1 + w_pitch^2 z^2) - M per sample.
std::vector<double> cmc_residual(const TSCurve& g, HelicoidalParams p, double M);

} // namespace treadmill
