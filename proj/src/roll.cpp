// SPDX-License-Identifier: Apache-2.0
#include "treadmill/roll.hpp"

#include <cmath>
#include <vector>

#include "treadmill/kernels.hpp"
#include "treadmill/numerics.hpp"

namespace treadmill {

RollTrace roll(const SampledCurve& c) {
    const TurningAngle rho = turning_angle(c); // validates c
    const std::size_t n = c.size();

    RollTrace out;
    out.t = c.t;
    out.arclens = num::cumtrapz(c.t, speeds(c));
    out.x.resize(n);
    out.y.resize(n);

    // T_t(p) = (s(t), 0) + A(rho(t))(p - alpha(t)); the trace is T_t(0).
    std::vector<double> cr(n), sr(n);
    for (std::size_t i = 0; i < n; ++i) {
        cr[i] = std::cos(rho.rho[i]);
        sr[i] = std::sin(rho.rho[i]);
    }
    kernels::apply_rotation(cr.data(), sr.data(), c.x.data(), c.y.data(), out.x.data(),
                            out.y.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
        out.x[i] = out.arclens[i] - out.x[i];
        out.y[i] = -out.y[i];
    }
    return out;
}

} // namespace treadmill
