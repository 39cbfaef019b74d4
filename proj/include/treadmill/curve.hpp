// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "treadmill/geom.hpp"

namespace treadmill {

/// Tangent norms at or below this threshold make a curve irregular.
inline constexpr double kEpsReg = 1e-12;
/// Distance from the vertical axis below which a trace sample counts as on it.
inline constexpr double kEpsAxis = 1e-9;
/// Strict positivity margin for the range condition w*f - z' > 0.
inline constexpr double kDeltaPos = 1e-9;

/// A regular plane curve as parameter/position/tangent samples (structure of
/// arrays; the coordinate arrays feed the SIMD kernels directly). Second
/// derivatives are optional: generators attach them analytically, CSV-read
/// curves fall back to grid finite differences.
struct SampledCurve {
    std::vector<double> t;        ///< strictly increasing parameters
    std::vector<double> x, y;     ///< positions
    std::vector<double> tx, ty;   ///< tangents d(position)/dt
    std::vector<double> sx, sy;   ///< second derivatives (empty when absent)

    std::size_t size() const { return t.size(); }
    bool has_seconds() const { return !sx.empty(); }
    Vec2 point(std::size_t i) const { return {x[i], y[i]}; }
    Vec2 tangent(std::size_t i) const { return {tx[i], ty[i]}; }
    Vec2 second(std::size_t i) const { return {sx[i], sy[i]}; }
};

/// Checks array lengths, parameter monotonicity, and tangent regularity;
/// throws ValidationError or RegularityViolation.
void validate_curve(const SampledCurve& c, double eps_reg = kEpsReg);

/// A curve given by functors. position is required; missing derivatives are
/// replaced by central finite differences of step (b-a)*1e-5 at sampling time.
struct AnalyticCurve {
    std::function<Vec2(double)> position;
    std::function<Vec2(double)> derivative; ///< optional
    std::function<Vec2(double)> second;     ///< optional
};

/// Evaluate src at n >= 2 uniform parameters on [a, b].
SampledCurve sample(const AnalyticCurve& src, double a, double b, std::size_t n);

/// The continuous tangent-angle lift rho with rho(a) the principal angle of
/// the initial tangent: (cos rho, sin rho) = tangent/|tangent|. Successive
/// increments are the signed angles between consecutive tangents; throws
/// UnwrapFailure when a turn reaches pi - 0.1.
struct TurningAngle {
    std::vector<double> t;
    std::vector<double> rho;
};
TurningAngle turning_angle(const SampledCurve& c);

/// Signed curvature (x'y'' - y'x'')/|alpha'|^3 per sample, equal to
/// <alpha'', J alpha'> for unit-speed curves. Uses attached second
/// derivatives when present, 5-point grid differences of the tangents
/// otherwise.
std::vector<double> curvature(const SampledCurve& c);

/// |tangent| per sample.
std::vector<double> speeds(const SampledCurve& c);

/// Total arc length (trapezoid of speeds).
double arc_length(const SampledCurve& c);

/// Apply A(tau) to positions, tangents, and seconds.
SampledCurve rotate(const SampledCurve& c, double tau);

/// Orientation reversal beta(t) = alpha(-t) on the mirrored interval.
SampledCurve reverse(const SampledCurve& c);

/// Resample onto a uniform arc-length grid (same sample count, parameters
/// [0, L]); positions/tangent directions come from cubic Hermite pieces and
/// returned tangents are exactly unit. Attached seconds are dropped; callers
/// that know the curvature reattach analytically, using source_params (the
/// original parameter of each output sample) when supplied.
SampledCurve arclength_reparametrize(const SampledCurve& c,
                                     std::vector<double>* source_params = nullptr);

} // namespace treadmill
