// SPDX-License-Identifier: Apache-2.0
#include "treadmill/curve.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "treadmill/errors.hpp"
#include "treadmill/kernels.hpp"
#include "treadmill/numerics.hpp"

namespace treadmill {

void validate_curve(const SampledCurve& c, double eps_reg) {
    const std::size_t n = c.t.size();
    if (n < 2) throw ValidationError("curve needs at least 2 samples");
    if (c.x.size() != n || c.y.size() != n || c.tx.size() != n || c.ty.size() != n)
        throw ValidationError("curve arrays have different lengths");
    if (!c.sx.empty() && (c.sx.size() != n || c.sy.size() != n))
        throw ValidationError("curve second-derivative arrays have different lengths");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(c.t[i] < c.t[i + 1]))
            throw ValidationError("curve parameters must be strictly increasing (index " +
                                  std::to_string(i + 1) + ")");
    for (std::size_t i = 0; i < n; ++i) {
        const double nr = std::hypot(c.tx[i], c.ty[i]);
        if (!(nr > eps_reg))
            throw RegularityViolation("tangent norm " + std::to_string(nr) + " at t = " +
                                      std::to_string(c.t[i]) + " is below the regularity threshold");
    }
}

SampledCurve sample(const AnalyticCurve& src, double a, double b, std::size_t n) {
    if (!src.position) throw ValidationError("sample: position functor is required");
    if (!(b > a)) throw ValidationError("sample: need b > a");
    if (n < 2) throw ValidationError("sample: need at least 2 samples");
    SampledCurve c;
    c.t = num::linspace(a, b, n);
    c.x.resize(n);
    c.y.resize(n);
    c.tx.resize(n);
    c.ty.resize(n);
    const double h = (b - a) * 1e-5;
    const bool has_second = static_cast<bool>(src.second);
    if (has_second) {
        c.sx.resize(n);
        c.sy.resize(n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double t = c.t[i];
        const Vec2 p = src.position(t);
        c.x[i] = p.x;
        c.y[i] = p.y;
        const Vec2 d = src.derivative
                           ? src.derivative(t)
                           : (src.position(t + h) - src.position(t - h)) * (1.0 / (2.0 * h));
        c.tx[i] = d.x;
        c.ty[i] = d.y;
        if (has_second) {
            const Vec2 s2 = src.second(t);
            c.sx[i] = s2.x;
            c.sy[i] = s2.y;
        }
    }
    return c;
}

TurningAngle turning_angle(const SampledCurve& c) {
    validate_curve(c);
    const std::size_t n = c.size();
    TurningAngle out;
    out.t = c.t;
    out.rho.resize(n);
    out.rho[0] = std::atan2(c.ty[0], c.tx[0]);
    for (std::size_t i = 1; i < n; ++i) {
        const Vec2 prev = c.tangent(i - 1), cur = c.tangent(i);
        const double d = std::atan2(cross(prev, cur), dot(prev, cur));
        if (std::abs(d) >= std::numbers::pi - 0.1)
            throw UnwrapFailure("tangent turns by " + std::to_string(d) +
                                " rad between samples " + std::to_string(i - 1) + " and " +
                                std::to_string(i) + "; increase the sampling density");
        out.rho[i] = out.rho[i - 1] + d;
    }
    return out;
}

std::vector<double> speeds(const SampledCurve& c) {
    std::vector<double> nr(c.size());
    kernels::norms(c.tx.data(), c.ty.data(), nr.data(), c.size());
    return nr;
}

std::vector<double> curvature(const SampledCurve& c) {
    validate_curve(c);
    const std::size_t n = c.size();
    std::vector<double> sx, sy;
    const std::vector<double>*px = &c.sx, *py = &c.sy;
    if (!c.has_seconds()) {
        sx = num::deriv1(c.t, c.tx);
        sy = num::deriv1(c.t, c.ty);
        px = &sx;
        py = &sy;
    }
    const std::vector<double> sp = speeds(c);
    std::vector<double> k(n);
    for (std::size_t i = 0; i < n; ++i)
        k[i] = (c.tx[i] * (*py)[i] - c.ty[i] * (*px)[i]) / (sp[i] * sp[i] * sp[i]);
    return k;
}

double arc_length(const SampledCurve& c) {
    validate_curve(c);
    return num::cumtrapz(c.t, speeds(c)).back();
}

SampledCurve rotate(const SampledCurve& c, double tau) {
    validate_curve(c);
    const std::size_t n = c.size();
    const double ct = std::cos(tau), st = std::sin(tau);
    SampledCurve out;
    out.t = c.t;
    out.x.resize(n);
    out.y.resize(n);
    out.tx.resize(n);
    out.ty.resize(n);
    kernels::apply_rotation_fixed(ct, st, c.x.data(), c.y.data(), out.x.data(), out.y.data(), n);
    kernels::apply_rotation_fixed(ct, st, c.tx.data(), c.ty.data(), out.tx.data(),
                                  out.ty.data(), n);
    if (c.has_seconds()) {
        out.sx.resize(n);
        out.sy.resize(n);
        kernels::apply_rotation_fixed(ct, st, c.sx.data(), c.sy.data(), out.sx.data(),
                                      out.sy.data(), n);
    }
    return out;
}

SampledCurve reverse(const SampledCurve& c) {
    validate_curve(c);
    const std::size_t n = c.size();
    SampledCurve out;
    out.t.resize(n);
    out.x.resize(n);
    out.y.resize(n);
    out.tx.resize(n);
    out.ty.resize(n);
    const bool sec = c.has_seconds();
    if (sec) {
        out.sx.resize(n);
        out.sy.resize(n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        out.t[i] = -c.t[j];
        out.x[i] = c.x[j];
        out.y[i] = c.y[j];
        out.tx[i] = -c.tx[j];
        out.ty[i] = -c.ty[j];
        if (sec) {
            out.sx[i] = c.sx[j];
            out.sy[i] = c.sy[j];
        }
    }
    return out;
}

SampledCurve arclength_reparametrize(const SampledCurve& c, std::vector<double>* source_params) {
    validate_curve(c);
    const std::size_t n = c.size();
    const std::vector<double> sp = speeds(c);
    const std::vector<double> s = num::cumtrapz(c.t, sp);
    const double L = s.back();
    if (!(L > 0.0)) throw ValidationError("arclength_reparametrize: zero total length");

    std::vector<double> dtds(n);
    for (std::size_t i = 0; i < n; ++i) dtds[i] = 1.0 / sp[i];
    const std::vector<double> u = num::linspace(0.0, L, n);
    const std::vector<double> tq = num::hermite_eval(s, c.t, dtds, u);
    if (source_params) *source_params = tq;

    SampledCurve out;
    out.t = u;
    std::vector<double> dx, dy;
    out.x = num::hermite_eval(c.t, c.x, c.tx, tq, &dx);
    out.y = num::hermite_eval(c.t, c.y, c.ty, tq, &dy);
    out.tx.resize(n);
    out.ty.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double nr = std::hypot(dx[i], dy[i]);
        if (!(nr > kEpsReg))
            throw RegularityViolation("arclength_reparametrize: interpolated tangent vanished");
        out.tx[i] = dx[i] / nr;
        out.ty[i] = dy[i] / nr;
    }
    return out;
}

} // namespace treadmill
