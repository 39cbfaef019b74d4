// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared curve builders and comparison helpers for the test suites.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "treadmill/curve.hpp"
#include "treadmill/treadmill.hpp"

namespace testutil {

using treadmill::AnalyticCurve;
using treadmill::SampledCurve;
using treadmill::TSCurve;
using treadmill::Vec2;

inline AnalyticCurve circle(double r, double cx = 0.0, double cy = 0.0) {
    AnalyticCurve a;
    a.position = [=](double t) { return Vec2{cx + r * std::cos(t), cy + r * std::sin(t)}; };
    a.derivative = [=](double t) { return Vec2{-r * std::sin(t), r * std::cos(t)}; };
    a.second = [=](double t) { return Vec2{-r * std::cos(t), -r * std::sin(t)}; };
    return a;
}

/// Smooth closed test curve: a circle of radius R in [1, 2] with a small
/// random trigonometric radial perturbation (three harmonics, coefficients
/// at most 0.08 R), random phase, and a random center offset up to 0.3.
/// Tame enough that the treadmill image stays invertible.
inline AnalyticCurve tame_curve(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto un = [&rng](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    const double R = un(1.0, 2.0);
    constexpr int K = 3;
    std::array<double, K> ac{}, as{};
    for (int k = 0; k < K; ++k) {
        ac[static_cast<std::size_t>(k)] = un(-0.08, 0.08) * R;
        as[static_cast<std::size_t>(k)] = un(-0.08, 0.08) * R;
    }
    const double ph = un(0.0, 2.0 * std::numbers::pi);
    const double cx = un(-0.3, 0.3);
    const double cy = un(-0.3, 0.3);

    struct Rad {
        double v, dv, ddv;
    };
    auto rad = [ac, as](double t) {
        Rad r{0.0, 0.0, 0.0};
        for (int k = 1; k <= K; ++k) {
            const double a = ac[static_cast<std::size_t>(k - 1)];
            const double b = as[static_cast<std::size_t>(k - 1)];
            const double c = std::cos(k * t), s = std::sin(k * t);
            r.v += a * c + b * s;
            r.dv += k * (-a * s + b * c);
            r.ddv += k * k * (-a * c - b * s);
        }
        return r;
    };

    AnalyticCurve out;
    out.position = [=](double t) {
        const Rad r = rad(t);
        const double ct = std::cos(t + ph), st = std::sin(t + ph);
        return Vec2{cx + (R + r.v) * ct, cy + (R + r.v) * st};
    };
    out.derivative = [=](double t) {
        const Rad r = rad(t);
        const double ct = std::cos(t + ph), st = std::sin(t + ph);
        return Vec2{r.dv * ct - (R + r.v) * st, r.dv * st + (R + r.v) * ct};
    };
    out.second = [=](double t) {
        const Rad r = rad(t);
        const double ct = std::cos(t + ph), st = std::sin(t + ph);
        return Vec2{r.ddv * ct - 2.0 * r.dv * st - (R + r.v) * ct,
                    r.ddv * st + 2.0 * r.dv * ct - (R + r.v) * st};
    };
    return out;
}

inline double max_point_dist(const TSCurve& a, const TSCurve& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, (a.point(i) - b.point(i)).norm());
    return worst;
}

inline double max_point_dist(const SampledCurve& a, const SampledCurve& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, (a.point(i) - b.point(i)).norm());
    return worst;
}

/// Least-squares rotation angle aligning a onto b (complex regression),
/// then the worst pointwise distance |e^{i tau} a - b|.
inline double fitted_rotation_residual(const SampledCurve& a, const SampledCurve& b) {
    std::complex<double> S{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        S += std::complex<double>(b.x[i], b.y[i]) * std::conj(std::complex<double>(a.x[i], a.y[i]));
    const std::complex<double> e = S / std::abs(S);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::complex<double> d = e * std::complex<double>(a.x[i], a.y[i]) -
                                       std::complex<double>(b.x[i], b.y[i]);
        worst = std::max(worst, std::abs(d));
    }
    return worst;
}

} // namespace testutil
