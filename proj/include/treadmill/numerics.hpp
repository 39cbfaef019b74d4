// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

// Grid numerics shared by the curve operators: finite differences on sampled
// data, cumulative quadrature, and cubic Hermite interpolation.

namespace treadmill::num {

std::vector<double> linspace(double a, double b, std::size_t n);

/// First derivative of samples f on grid t, 5-point stencils (4th order on
/// uniform grids), one-sided at the ends. Grids may be mildly nonuniform.
std::vector<double> deriv1(const std::vector<double>& t, const std::vector<double>& f);

/// Second derivative, same stencil policy.
std::vector<double> deriv2(const std::vector<double>& t, const std::vector<double>& f);

/// Periodic variants for closed traces: f[0] == f[n-1] is the same sample and
/// the stencil wraps. The grid must be uniform.
std::vector<double> deriv1_periodic(const std::vector<double>& t, const std::vector<double>& f);
std::vector<double> deriv2_periodic(const std::vector<double>& t, const std::vector<double>& f);

/// Cumulative trapezoid with F[0] = 0.
std::vector<double> cumtrapz(const std::vector<double>& t, const std::vector<double>& f);

/// Cumulative quadrature integrating a local parabola per interval (the two
/// 3-point fits sharing the interval are averaged); one order better than the
/// trapezoid on smooth data. F[0] = 0.
std::vector<double> cumquad(const std::vector<double>& t, const std::vector<double>& f);

/// Cubic Hermite interpolation of (t, f, df) at query points q (clamped to
/// [t.front(), t.back()]). Returns values; optionally writes derivatives.
std::vector<double> hermite_eval(const std::vector<double>& t, const std::vector<double>& f,
                                 const std::vector<double>& df, const std::vector<double>& q,
                                 std::vector<double>* dout = nullptr);

} // namespace treadmill::num
