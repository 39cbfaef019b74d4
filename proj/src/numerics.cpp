// SPDX-License-Identifier: Apache-2.0
#include "treadmill/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "treadmill/errors.hpp"

namespace treadmill::num {
namespace {

void require_same_size(const std::vector<double>& t, const std::vector<double>& f,
                       const char* who) {
    if (t.size() != f.size())
        throw ValidationError(std::string(who) + ": grid and samples have different lengths");
}

/// Derivatives at t0 of the quartic through five nodes (ts, fs): returns
/// {p'(t0), p''(t0)}. Nodes are shifted to t0 and scaled before the solve.
std::array<double, 2> quartic_derivs(const double* ts, const double* fs, double t0) {
    double scale = 0.0;
    for (int k = 0; k < 5; ++k) scale = std::max(scale, std::abs(ts[k] - t0));
    if (scale == 0.0) throw ValidationError("derivative stencil has coincident nodes");

    double a[5][6];
    for (int r = 0; r < 5; ++r) {
        const double u = (ts[r] - t0) / scale;
        double p = 1.0;
        for (int c = 0; c < 5; ++c) {
            a[r][c] = p;
            p *= u;
        }
        a[r][5] = fs[r];
    }
    for (int col = 0; col < 5; ++col) {
        int piv = col;
        for (int r = col + 1; r < 5; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) throw ValidationError("derivative stencil is singular");
        if (piv != col)
            for (int c = col; c < 6; ++c) std::swap(a[piv][c], a[col][c]);
        for (int r = col + 1; r < 5; ++r) {
            const double m = a[r][col] / a[col][col];
            for (int c = col; c < 6; ++c) a[r][c] -= m * a[col][c];
        }
    }
    double coef[5];
    for (int r = 4; r >= 0; --r) {
        double acc = a[r][5];
        for (int c = r + 1; c < 5; ++c) acc -= a[r][c] * coef[c];
        coef[r] = acc / a[r][r];
    }
    return {coef[1] / scale, 2.0 * coef[2] / (scale * scale)};
}

std::vector<double> deriv_impl(const std::vector<double>& t, const std::vector<double>& f,
                               int order) {
    require_same_size(t, f, "deriv");
    const std::size_t n = t.size();
    if (n < 5) throw ValidationError("deriv: need at least 5 samples");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j0 = (i < 2) ? 0 : std::min(i - 2, n - 5);
        const auto d = quartic_derivs(&t[j0], &f[j0], t[i]);
        out[i] = (order == 1) ? d[0] : d[1];
    }
    return out;
}

double uniform_step(const std::vector<double>& t, const char* who) {
    const std::size_t n = t.size();
    const double h = (t.back() - t.front()) / static_cast<double>(n - 1);
    if (h <= 0.0) throw ValidationError(std::string(who) + ": grid must be increasing");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (std::abs((t[i + 1] - t[i]) - h) > 1e-6 * std::abs(h))
            throw ValidationError(std::string(who) + ": grid must be uniform");
    return h;
}

std::vector<double> deriv_periodic_impl(const std::vector<double>& t,
                                        const std::vector<double>& f, int order,
                                        const char* who) {
    require_same_size(t, f, who);
    const std::size_t n = t.size();
    if (n < 6) throw ValidationError(std::string(who) + ": need at least 6 samples");
    const double h = uniform_step(t, who);
    const std::size_t m = n - 1; // f[0] == f[n-1] is the same point
    auto at = [&](std::ptrdiff_t i) {
        std::ptrdiff_t k = i % static_cast<std::ptrdiff_t>(m);
        if (k < 0) k += static_cast<std::ptrdiff_t>(m);
        return f[static_cast<std::size_t>(k)];
    };
    std::vector<double> out(n);
    for (std::size_t i = 0; i < m; ++i) {
        const auto j = static_cast<std::ptrdiff_t>(i);
        const double fm2 = at(j - 2), fm1 = at(j - 1), f0 = f[i], fp1 = at(j + 1),
                     fp2 = at(j + 2);
        out[i] = (order == 1)
                     ? (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
                     : (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    }
    out[m] = out[0];
    return out;
}

/// Integral over [lo, hi] of the quadratic through (ta, fa), (tb, fb),
/// (tc, fc); everything is shifted by lo first for conditioning.
double quad_segment(double ta, double fa, double tb, double fb, double tc, double fc,
                    double lo, double hi) {
    ta -= lo;
    tb -= lo;
    tc -= lo;
    hi -= lo;
    auto piece = [hi](double p, double q, double denom) {
        auto prim = [p, q](double x) {
            return x * x * x / 3.0 - (p + q) * x * x / 2.0 + p * q * x;
        };
        return prim(hi) / denom; // prim(0) == 0
    };
    return fa * piece(tb, tc, (ta - tb) * (ta - tc)) +
           fb * piece(ta, tc, (tb - ta) * (tb - tc)) +
           fc * piece(ta, tb, (tc - ta) * (tc - tb));
}

} // namespace

std::vector<double> linspace(double a, double b, std::size_t n) {
    if (n == 0) throw ValidationError("linspace: need at least one sample");
    std::vector<double> t(n);
    if (n == 1) {
        t[0] = a;
        return t;
    }
    const double step = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) t[i] = a + step * static_cast<double>(i);
    t[n - 1] = b;
    return t;
}

std::vector<double> deriv1(const std::vector<double>& t, const std::vector<double>& f) {
    return deriv_impl(t, f, 1);
}

std::vector<double> deriv2(const std::vector<double>& t, const std::vector<double>& f) {
    return deriv_impl(t, f, 2);
}

std::vector<double> deriv1_periodic(const std::vector<double>& t,
                                    const std::vector<double>& f) {
    return deriv_periodic_impl(t, f, 1, "deriv1_periodic");
}

std::vector<double> deriv2_periodic(const std::vector<double>& t,
                                    const std::vector<double>& f) {
    return deriv_periodic_impl(t, f, 2, "deriv2_periodic");
}

std::vector<double> cumtrapz(const std::vector<double>& t, const std::vector<double>& f) {
    require_same_size(t, f, "cumtrapz");
    if (t.empty()) throw ValidationError("cumtrapz: empty input");
    std::vector<double> F(t.size(), 0.0);
    for (std::size_t i = 1; i < t.size(); ++i)
        F[i] = F[i - 1] + 0.5 * (f[i] + f[i - 1]) * (t[i] - t[i - 1]);
    return F;
}

std::vector<double> cumquad(const std::vector<double>& t, const std::vector<double>& f) {
    require_same_size(t, f, "cumquad");
    const std::size_t n = t.size();
    if (n == 0) throw ValidationError("cumquad: empty input");
    std::vector<double> F(n, 0.0);
    if (n == 1) return F;
    if (n == 2) {
        F[1] = 0.5 * (f[0] + f[1]) * (t[1] - t[0]);
        return F;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double lo = t[i], hi = t[i + 1];
        const bool left = i >= 1, right = i + 2 < n;
        double seg = 0.0;
        if (left)
            seg += quad_segment(t[i - 1], f[i - 1], t[i], f[i], t[i + 1], f[i + 1], lo, hi);
        if (right)
            seg += quad_segment(t[i], f[i], t[i + 1], f[i + 1], t[i + 2], f[i + 2], lo, hi);
        if (left && right) seg *= 0.5;
        F[i + 1] = F[i] + seg;
    }
    return F;
}

std::vector<double> hermite_eval(const std::vector<double>& t, const std::vector<double>& f,
                                 const std::vector<double>& df, const std::vector<double>& q,
                                 std::vector<double>* dout) {
    const std::size_t n = t.size();
    if (f.size() != n || df.size() != n)
        throw ValidationError("hermite_eval: array lengths differ");
    if (n < 2) throw ValidationError("hermite_eval: need at least 2 nodes");
    std::vector<double> out(q.size());
    if (dout) dout->assign(q.size(), 0.0);
    for (std::size_t k = 0; k < q.size(); ++k) {
        const double x = std::clamp(q[k], t.front(), t.back());
        std::size_t i =
            static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), x) - t.begin());
        i = (i == 0) ? 0 : i - 1;
        if (i > n - 2) i = n - 2;
        const double h = t[i + 1] - t[i];
        if (h <= 0.0) throw ValidationError("hermite_eval: nodes must be increasing");
        const double u = (x - t[i]) / h;
        const double u2 = u * u, u3 = u2 * u;
        out[k] = (2.0 * u3 - 3.0 * u2 + 1.0) * f[i] + (u3 - 2.0 * u2 + u) * h * df[i] +
                 (-2.0 * u3 + 3.0 * u2) * f[i + 1] + (u3 - u2) * h * df[i + 1];
        if (dout)
            (*dout)[k] = ((6.0 * u2 - 6.0 * u) * f[i] + (-6.0 * u2 + 6.0 * u) * f[i + 1]) / h +
                         (3.0 * u2 - 4.0 * u + 1.0) * df[i] + (3.0 * u2 - 2.0 * u) * df[i + 1];
    }
    return out;
}

} // namespace treadmill::num
