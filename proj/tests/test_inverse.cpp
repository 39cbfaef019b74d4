// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include "doctest.h"

#include "helpers.hpp"
#include "treadmill/errors.hpp"
#include "treadmill/inverse.hpp"
#include "treadmill/numerics.hpp"
#include "treadmill/treadmill.hpp"

using namespace treadmill;

namespace {

/// Trace running down the negative x-axis: z from -1 to -2, w = 0.
TSCurve negative_axis_trace(std::size_t n) {
    TSCurve g;
    g.t = num::linspace(0.0, 1.0, n);
    g.z.resize(n);
    g.w.assign(n, 0.0);
    g.speed.assign(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) g.z[i] = -1.0 - g.t[i];
    return g;
}

/// Upper branch of the hyperbola w^2 - z^2 = 1 traversed with decreasing z
/// starting on the axis (the orientation the range condition accepts).
TSCurve hyperbola_trace(std::size_t n, double span = 6.0) {
    TSCurve g;
    g.t = num::linspace(0.0, span, n);
    g.z.resize(n);
    g.w.resize(n);
    g.speed.assign(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        g.z[i] = -g.t[i] / 2.0; // 1/(1 + M^2 w_pitch^2) = 1/2 for M = w_pitch = 1
        g.w[i] = std::sqrt(1.0 + g.z[i] * g.z[i]);
    }
    return g;
}

} // namespace

TEST_CASE("a segment of the negative x-axis inverts to the positive x-axis") {
    const TSCurve g = negative_axis_trace(101);
    const InverseResult inv = invert(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(std::abs(inv.f[i]) < 1e-12);
        CHECK(std::abs(inv.alpha.x[i] - (1.0 + g.t[i])) < 1e-12);
        CHECK(std::abs(inv.alpha.y[i]) < 1e-12);
        CHECK(std::abs(inv.alpha.tx[i] - 1.0) < 1e-12);
        CHECK(std::abs(inv.alpha.ty[i]) < 1e-12);
    }
    CHECK(inv.range.accepted);
    CHECK(inv.range.min_margin == doctest::Approx(1.0));
}

TEST_CASE("companion function of the hyperbola matches the closed form") {
    const TSCurve g = hyperbola_trace(2001);
    const CompanionResult comp = companion_f(g);
    // w' = -f z with w = sqrt(1 + z^2), z' = -1/2 gives f = 1/(2 sqrt(1+z^2)).
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        worst = std::max(worst, std::abs(comp.f[i] - 1.0 / (2.0 * std::sqrt(1.0 + g.z[i] * g.z[i]))));
    CHECK(worst < 1e-6);
    // The first sample sits on the vertical axis and is filled by the limit.
    CHECK(comp.filled[0] == 1);
    CHECK(std::abs(comp.f[0] - 0.5) < 1e-6);
}

TEST_CASE("round trip through the inverse reproduces the named traces") {
    for (const TSCurve& g : {negative_axis_trace(501), hyperbola_trace(1001)}) {
        const InverseResult inv = invert(g);
        const TSCurve back = ts(inv.alpha);
        CHECK(testutil::max_point_dist(back, g) < 1e-6);
    }
}

TEST_CASE("the full vertical line violates the range condition") {
    TSCurve g;
    const std::size_t n = 201;
    g.t = num::linspace(0.0, 1.0, n);
    g.z.assign(n, 1.0);
    g.w = num::linspace(-1.0, 1.0, n); // crosses the x-axis
    g.speed.assign(n, 1.0);
    CHECK_THROWS_AS(invert(g), RangeViolation);
}

TEST_CASE("a moving trace on the y-axis is not a treadmill image") {
    TSCurve g;
    const std::size_t n = 201;
    g.t = num::linspace(0.0, 1.0, n);
    g.z.assign(n, 0.0);
    g.w = num::linspace(-2.0, -1.0, n);
    g.speed.assign(n, 1.0);
    CHECK_THROWS_AS(invert(g), NotATreadmillSled);
}

TEST_CASE("constant traces need an explicit companion function") {
    TSCurve g;
    const std::size_t n = 129;
    g.t = num::linspace(0.0, 2.0 * std::numbers::pi, n);
    g.z.assign(n, 0.0);
    g.w.assign(n, 1.0);
    g.speed.assign(n, 1.0);
    CHECK_THROWS_AS(invert(g), ConstantCurve);

    InvertOptions opt;
    opt.f_override = std::vector<double>(n, 1.0);
    const InverseResult inv = invert(g, opt);
    // f = 1 integrates to F = t: the unit circle through (0, -1).
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(inv.alpha.x[i] - std::sin(g.t[i])) < 1e-12);
        CHECK(std::abs(inv.alpha.y[i] + std::cos(g.t[i])) < 1e-12);
    }
    const TSCurve back = ts(inv.alpha);
    CHECK(testutil::max_point_dist(back, g) < 1e-12);
}

TEST_CASE("antiderivative offsets rotate the reconstruction rigidly") {
    const TSCurve g = hyperbola_trace(501);
    const InverseResult base = invert(g);
    InvertOptions opt;
    opt.antiderivative_offset = 0.8;
    const InverseResult shifted = invert(g, opt);
    // alpha_delta = A(-delta) alpha_0.
    const SampledCurve expect = rotate(base.alpha, -0.8);
    CHECK(testutil::max_point_dist(shifted.alpha, expect) < 1e-12);
    // Both reconstructions share the treadmill image.
    CHECK(testutil::max_point_dist(ts(shifted.alpha), g) < 1e-6);
}

TEST_CASE("inverse input validation") {
    TSCurve g = hyperbola_trace(10);
    InvertOptions opt;
    opt.f_override = std::vector<double>(3, 1.0); // wrong length
    CHECK_THROWS_AS(invert(g, opt), ValidationError);
    TSCurve tiny = hyperbola_trace(10);
    tiny.t.resize(4);
    tiny.z.resize(4);
    tiny.w.resize(4);
    tiny.speed.resize(4);
    CHECK_THROWS_AS(invert(tiny), ValidationError);
}

TEST_CASE("random curves are recovered up to the rotation family") {
    for (std::uint64_t seed = 300; seed < 305; ++seed) {
        const SampledCurve c = sample(testutil::tame_curve(seed), 0.0, 2.0 * std::numbers::pi, 4001);
        const TSCurve g = ts(c);
        const InverseResult inv = invert(g);
        CHECK(testutil::fitted_rotation_residual(inv.alpha, c) < 1e-5);
    }
}
