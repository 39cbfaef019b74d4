// SPDX-License-Identifier: Apache-2.0
#include "treadmill/treadmill.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "treadmill/errors.hpp"
#include "treadmill/kernels.hpp"
#include "treadmill/numerics.hpp"

namespace treadmill {

TSCurve ts(const SampledCurve& c) {
    validate_curve(c);
    const std::size_t n = c.size();
    TSCurve g;
    g.t = c.t;
    g.z.resize(n);
    g.w.resize(n);
    g.speed.resize(n);
    kernels::ts_transform(c.x.data(), c.y.data(), c.tx.data(), c.ty.data(), g.z.data(),
                          g.w.data(), g.speed.data(), n);
    return g;
}

TSCurve ts_oracle(const SampledCurve& c) {
    validate_curve(c);
    const std::size_t n = c.size();
    TSCurve g;
    g.t = c.t;
    g.z.resize(n);
    g.w.resize(n);
    g.speed.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        // The oriented isometry T with T(alpha) = 0 and dT(unit tangent) =
        // (1, 0) is T(p) = A(rho)(p - alpha); the image of the origin is
        // -A(rho) alpha.
        const double rho = std::atan2(c.ty[i], c.tx[i]);
        const Vec2 img = -(rotation(rho).apply(c.point(i)));
        g.z[i] = img.x;
        g.w[i] = img.y;
        g.speed[i] = c.tangent(i).norm();
    }
    return g;
}

TSCurve phi_ts(const SampledCurve& c, const std::vector<double>& phi) {
    validate_curve(c);
    const std::size_t n = c.size();
    if (phi.size() != n) throw ValidationError("phi_ts: phi needs one entry per sample");
    TSCurve g;
    g.t = c.t;
    g.z.resize(n);
    g.w.resize(n);
    g.speed.resize(n);
    kernels::norms(c.tx.data(), c.ty.data(), g.speed.data(), n);
    // beta = A(rho - phi + pi) alpha. With (crho, srho) the unit tangent:
    //   cos(rho - phi + pi) = -(crho*cphi + srho*sphi)
    //   sin(rho - phi + pi) = -(srho*cphi - crho*sphi)
    // At phi = 0 these reduce to the exact doubles ts() feeds the rotation
    // kernel, so phi_ts(c, 0) == ts(c) bit for bit.
    std::vector<double> cth(n), sth(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double crho = c.tx[i] / g.speed[i];
        const double srho = c.ty[i] / g.speed[i];
        const double cphi = std::cos(phi[i]);
        const double sphi = std::sin(phi[i]);
        cth[i] = -(crho * cphi + srho * sphi);
        sth[i] = -(srho * cphi - crho * sphi);
    }
    kernels::apply_rotation(cth.data(), sth.data(), c.x.data(), c.y.data(), g.z.data(),
                            g.w.data(), n);
    return g;
}

std::vector<double> treadmill_program(const SampledCurve& c, const std::vector<double>& g) {
    validate_curve(c);
    const std::size_t n = c.size();
    if (g.size() != n)
        throw ValidationError("treadmill_program: g needs one entry per sample");
    const std::vector<double> kappa = curvature(c);
    const std::vector<double> sp = speeds(c);
    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i) integrand[i] = kappa[i] * sp[i];
    std::vector<double> phi = num::cumquad(c.t, integrand);
    const double rho0 = std::atan2(c.ty[0], c.tx[0]);
    for (std::size_t i = 0; i < n; ++i) phi[i] += rho0 + g[i] + std::numbers::pi;
    return phi;
}

} // namespace treadmill
