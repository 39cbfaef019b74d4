// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "treadmill/curve.hpp"

namespace treadmill {

/// Rolling a curve along the x-axis: for each t the oriented isometry T_t
/// carries the contact point alpha(t) to (s(t), 0) (s = cumulative arc
/// length) and the unit tangent to (1, 0); the trace is the orbit of the
/// origin, T_t(0) = (s(t), 0) - A(rho(t)) alpha(t).
struct RollTrace {
    std::vector<double> t;
    std::vector<double> x, y;       ///< trace of the origin
    std::vector<double> arclens;    ///< s(t), nondecreasing, arclens[0] = 0
};

RollTrace roll(const SampledCurve& c);

} // namespace treadmill
