// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "treadmill/errors.hpp"
#include "treadmill/numerics.hpp"

using namespace treadmill;
using num::linspace;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace

TEST_CASE("linspace hits both endpoints exactly") {
    const auto t = linspace(-1.25, 7.5, 57);
    CHECK(t.size() == 57);
    CHECK(t.front() == -1.25);
    CHECK(t.back() == 7.5);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
}

TEST_CASE("five-point first and second derivatives are exact on quartics") {
    // The stencil comes from a local quartic fit, so any quartic is
    // reproduced exactly (up to roundoff), even on a nonuniform grid.
    std::vector<double> t(41), f(41), d1(41), d2(41);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double u = 0.1 * static_cast<double>(i);
        t[i] = u + 0.03 * std::sin(3.0 * u); // mildly nonuniform, increasing
        const double v = t[i];
        f[i] = ((v - 1.0) * v + 2.0) * v * v - 3.0 * v + 0.5; // v^4 - v^3 + 2v^2 - 3v + 1/2
        d1[i] = ((4.0 * v - 3.0) * v + 4.0) * v - 3.0;
        d2[i] = (12.0 * v - 6.0) * v + 4.0;
    }
    CHECK(max_abs_diff(num::deriv1(t, f), d1) < 1e-9);
    CHECK(max_abs_diff(num::deriv2(t, f), d2) < 1e-7);
}

TEST_CASE("derivatives reject too-short input") {
    const std::vector<double> t{0.0, 1.0, 2.0};
    CHECK_THROWS_AS(num::deriv1(t, t), ValidationError);
    CHECK_THROWS_AS(num::deriv2(t, t), ValidationError);
}

TEST_CASE("periodic derivatives are fourth order on trigonometric data") {
    const std::size_t n = 257; // first sample repeated at the end
    const auto t = linspace(0.0, 2.0 * std::numbers::pi, n);
    std::vector<double> f(n), d1(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::sin(t[i]);
        d1[i] = std::cos(t[i]);
        d2[i] = -std::sin(t[i]);
    }
    f[n - 1] = f[0]; // close the loop exactly
    CHECK(max_abs_diff(num::deriv1_periodic(t, f), d1) < 1e-6);
    CHECK(max_abs_diff(num::deriv2_periodic(t, f), d2) < 1e-5);
}

TEST_CASE("cumulative trapezoid integrates linear data exactly") {
    const auto t = linspace(0.0, 4.0, 101);
    std::vector<double> f(t.size()), F(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        f[i] = 2.0 * t[i] + 1.0;
        F[i] = t[i] * t[i] + t[i];
    }
    CHECK(max_abs_diff(num::cumtrapz(t, f), F) < 1e-13);
    CHECK(num::cumtrapz(t, f)[0] == 0.0);
}

TEST_CASE("parabolic cumulative quadrature is exact on quadratics") {
    const auto t = linspace(-1.0, 3.0, 200);
    std::vector<double> f(t.size()), F(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        f[i] = (3.0 * t[i] - 2.0) * t[i] + 1.0;            // 3t^2 - 2t + 1
        F[i] = ((t[i] * t[i] - t[i]) * t[i] + t[i]) - (-3.0); // t^3 - t^2 + t, zeroed at t=-1
    }
    CHECK(max_abs_diff(num::cumquad(t, f), F) < 1e-12);
}

TEST_CASE("parabolic cumulative quadrature beats the trapezoid on sin") {
    const std::size_t n = 1001;
    const auto t = linspace(0.0, 2.0 * std::numbers::pi, n);
    std::vector<double> f(n), F(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::sin(t[i]);
        F[i] = 1.0 - std::cos(t[i]);
    }
    const double err_quad = max_abs_diff(num::cumquad(t, f), F);
    const double err_trap = max_abs_diff(num::cumtrapz(t, f), F);
    CHECK(err_quad < 1e-7);
    CHECK(err_quad < err_trap / 100.0);
}

TEST_CASE("cubic Hermite interpolation reproduces cubics with derivatives") {
    const auto t = linspace(-2.0, 2.0, 17);
    std::vector<double> f(t.size()), df(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        f[i] = t[i] * t[i] * t[i] - t[i];
        df[i] = 3.0 * t[i] * t[i] - 1.0;
    }
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uq(-2.0, 2.0);
    std::vector<double> q(200);
    for (double& v : q) v = uq(rng);
    std::vector<double> dout;
    const auto vals = num::hermite_eval(t, f, df, q, &dout);
    for (std::size_t i = 0; i < q.size(); ++i) {
        CHECK(std::abs(vals[i] - (q[i] * q[i] * q[i] - q[i])) < 1e-12);
        CHECK(std::abs(dout[i] - (3.0 * q[i] * q[i] - 1.0)) < 1e-11);
    }
}

TEST_CASE("cubic Hermite clamps queries to the sample range") {
    const std::vector<double> t{0.0, 1.0};
    const std::vector<double> f{2.0, 5.0};
    const std::vector<double> df{3.0, 3.0}; // the line 2 + 3t
    const auto vals = num::hermite_eval(t, f, df, {-1.0, 2.0});
    CHECK(vals[0] == doctest::Approx(2.0));
    CHECK(vals[1] == doctest::Approx(5.0));
}
