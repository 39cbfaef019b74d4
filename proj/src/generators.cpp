// SPDX-License-Identifier: Apache-2.0
#include "treadmill/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "treadmill/errors.hpp"
#include "treadmill/inverse.hpp"
#include "treadmill/log.hpp"
#include "treadmill/numerics.hpp"

namespace treadmill {
namespace {

/// Attach alpha'' = kappa * J * alpha' to a unit-speed curve.
void attach_unit_speed_seconds(SampledCurve& c, const std::vector<double>& kappa) {
    const std::size_t n = c.size();
    c.sx.resize(n);
    c.sy.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.sx[i] = kappa[i] * (-c.ty[i]);
        c.sy[i] = kappa[i] * c.tx[i];
    }
}

/// Unit-speed reparametrization of an inverted curve with curvature
/// kappa = f / (w f - z') carried along analytically: kappa is interpolated
/// (cubic Hermite) at the source parameter of each resampled node and the
/// second derivatives are rebuilt from it.
SampledCurve reparametrize_with_curvature(const SampledCurve& alpha,
                                          const std::vector<double>& t_src,
                                          const std::vector<double>& f,
                                          const std::vector<double>& margin,
                                          bool periodic_kappa) {
    const std::size_t n = alpha.size();
    std::vector<double> kappa(n);
    for (std::size_t i = 0; i < n; ++i) kappa[i] = f[i] / margin[i];
    const std::vector<double> dkappa =
        periodic_kappa ? num::deriv1_periodic(t_src, kappa) : num::deriv1(t_src, kappa);

    std::vector<double> tq;
    SampledCurve out = arclength_reparametrize(alpha, &tq);

    // Tangents obtained by differentiating the position interpolant lose one
    // order of accuracy.  The source unit tangent field T obeys
    // dT/dt = kappa |alpha'| J T with kappa available in closed form, so
    // resampling T through its own Hermite interpolant restores that order.
    std::vector<double> Tx(n), Ty(n), dTx(n), dTy(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double spv = std::hypot(alpha.tx[i], alpha.ty[i]);
        Tx[i] = alpha.tx[i] / spv;
        Ty[i] = alpha.ty[i] / spv;
        const double ks = kappa[i] * spv;
        dTx[i] = -ks * Ty[i];
        dTy[i] = ks * Tx[i];
    }
    const std::vector<double> txq = num::hermite_eval(t_src, Tx, dTx, tq);
    const std::vector<double> tyq = num::hermite_eval(t_src, Ty, dTy, tq);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double nr = std::hypot(txq[i], tyq[i]);
        if (!(nr > 0.5))
            throw RegularityViolation("reparametrize: interpolated tangent field degenerated");
        out.tx[i] = txq[i] / nr;
        out.ty[i] = tyq[i] / nr;
    }

    const std::vector<double> kq = num::hermite_eval(t_src, kappa, dkappa, tq);
    attach_unit_speed_seconds(out, kq);
    return out;
}

struct MinimalState {
    double xi1, xi2, th;
};

MinimalState minimal_rhs(double w2, const MinimalState& s) {
    const double D = 1.0 + w2 * (s.xi1 * s.xi1 + s.xi2 * s.xi2);
    return {w2 * s.xi2 * s.xi2 / D - 1.0, -(w2 * s.xi1 * s.xi2) / D, w2 * s.xi2 / D};
}

MinimalState rk4_step(double w2, const MinimalState& s, double h) {
    const MinimalState k1 = minimal_rhs(w2, s);
    const MinimalState s2{s.xi1 + 0.5 * h * k1.xi1, s.xi2 + 0.5 * h * k1.xi2,
                          s.th + 0.5 * h * k1.th};
    const MinimalState k2 = minimal_rhs(w2, s2);
    const MinimalState s3{s.xi1 + 0.5 * h * k2.xi1, s.xi2 + 0.5 * h * k2.xi2,
                          s.th + 0.5 * h * k2.th};
    const MinimalState k3 = minimal_rhs(w2, s3);
    const MinimalState s4{s.xi1 + h * k3.xi1, s.xi2 + h * k3.xi2, s.th + h * k3.th};
    const MinimalState k4 = minimal_rhs(w2, s4);
    return {s.xi1 + h / 6.0 * (k1.xi1 + 2.0 * k2.xi1 + 2.0 * k3.xi1 + k4.xi1),
            s.xi2 + h / 6.0 * (k1.xi2 + 2.0 * k2.xi2 + 2.0 * k3.xi2 + k4.xi2),
            s.th + h / 6.0 * (k1.th + 2.0 * k2.th + 2.0 * k3.th + k4.th)};
}

void check_minimal_spec(const MinimalSpec& spec) {
    if (!(spec.w > 0.0)) throw ValidationError("minimal profile: pitch w must be positive");
    if (!(spec.s_span > 0.0)) throw ValidationError("minimal profile: s_span must be positive");
    if (spec.n < 2) throw ValidationError("minimal profile: need at least 2 samples");
}

} // namespace

SampledCurve minimal_profile(const MinimalSpec& spec) {
    check_minimal_spec(spec);
    const std::size_t n = spec.n;
    const double w2 = spec.w * spec.w;
    const double h = spec.s_span / static_cast<double>(n - 1);

    std::vector<MinimalState> states(n);
    states[0] = {0.0, spec.upper ? spec.M : -spec.M, 0.0};
    for (std::size_t i = 1; i < n; ++i) states[i] = rk4_step(w2, states[i - 1], h);

    SampledCurve c;
    c.t = num::linspace(0.0, spec.s_span, n);
    c.x.resize(n);
    c.y.resize(n);
    c.tx.resize(n);
    c.ty.resize(n);
    c.sx.resize(n);
    c.sy.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const MinimalState& s = states[i];
        const double ct = std::cos(s.th), st = std::sin(s.th);
        c.x[i] = -s.xi1 * ct + s.xi2 * st;
        c.y[i] = -s.xi1 * st - s.xi2 * ct;
        c.tx[i] = ct;
        c.ty[i] = st;
        const double thp = minimal_rhs(w2, s).th; // = kappa for the unit-speed curve
        c.sx[i] = thp * (-st);
        c.sy[i] = thp * ct;
    }
    return c;
}

SampledCurve minimal_profile_via_inverse(const MinimalSpec& spec) {
    check_minimal_spec(spec);
    if (spec.M == 0.0)
        throw ValidationError("minimal profile via inverse: M = 0 gives the axis itself; use "
                              "the direct generator");
    if (spec.n < 5)
        throw ValidationError("minimal profile via inverse: need at least 5 samples");
    const std::size_t n = spec.n;
    const double w2 = spec.w * spec.w;
    const double level = spec.upper ? spec.M : -spec.M;
    const double denom = 1.0 + w2 * spec.M * spec.M;

    TSCurve g;
    g.t = num::linspace(0.0, spec.s_span, n);
    g.z.resize(n);
    g.w.resize(n);
    g.speed.assign(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        g.z[i] = -g.t[i] / denom; // strictly decreasing: the accepted orientation
        g.w[i] = level * std::sqrt(1.0 + w2 * g.z[i] * g.z[i]);
    }

    InverseResult inv = invert(g);
    // Fix the rotation freedom so the initial tangent angle is zero, matching
    // the ODE generator's theta(0) = 0.
    const double delta = std::atan2(inv.alpha.ty[0], inv.alpha.tx[0]);
    SampledCurve out = rotate(inv.alpha, delta);

    std::vector<double> kappa(n);
    for (std::size_t i = 0; i < n; ++i) kappa[i] = inv.f[i] / inv.range.margin[i];
    attach_unit_speed_seconds(out, kappa);
    return out;
}

namespace {

void check_cmc_spec(const CMCSpec& spec) {
    if (!(spec.w > 0.0)) throw ValidationError("cmc profile: pitch w must be positive");
    if (!(spec.M > -0.25))
        throw EmptyLevelSet("cmc profile: the level set is empty for M <= -1/4 (M = " +
                            std::to_string(spec.M) + ")");
    if (spec.n < 8) throw ValidationError("cmc profile: need at least 8 samples");
}

Vec2 level_gradient(double w2, Vec2 p) {
    const double base = 1.0 + w2 * p.x * p.x;
    const double q = std::sqrt(base);
    return {2.0 * p.x + p.y * w2 * p.x / (base * q), 2.0 * p.y - 1.0 / q};
}

double level_residual(double w2, double M, Vec2 p) {
    return p.x * p.x + p.y * p.y - p.y / std::sqrt(1.0 + w2 * p.x * p.x) - M;
}

/// Newton-correct p onto the level set along the gradient.
Vec2 level_correct(double w2, double M, Vec2 p) {
    for (int it = 0; it < 12; ++it) {
        const double r = level_residual(w2, M, p);
        if (std::abs(r) <= 1e-13) break;
        const Vec2 gr = level_gradient(w2, p);
        const double g2 = dot(gr, gr);
        if (g2 < 1e-30)
            throw ValidationError("level-set tracing hit a singular gradient");
        p = p - gr * (r / g2);
    }
    return p;
}

Vec2 level_tangent(double w2, Vec2 p) {
    const Vec2 gr = level_gradient(w2, p);
    const double nr = gr.norm();
    if (nr < 1e-15) throw ValidationError("level-set tracing hit a singular gradient");
    return {gr.y / nr, -gr.x / nr};
}

} // namespace

TSCurve cmc_level_curve(const CMCSpec& spec) {
    check_cmc_spec(spec);
    const double w2 = spec.w * spec.w;
    const double y0 = (1.0 + std::sqrt(1.0 + 4.0 * spec.M)) / 2.0;
    const Vec2 p0{0.0, y0};
    const Vec2 tan0 = level_tangent(w2, p0);

    // First pass: estimate the period length with a fine fixed step.
    const double h0 = 2.0 * std::numbers::pi * y0 / 4096.0;
    double L = 0.0;
    {
        Vec2 p = p0;
        const std::size_t max_steps = 400000;
        bool closed = false;
        for (std::size_t i = 1; i <= max_steps; ++i) {
            p = level_correct(w2, spec.M, p + level_tangent(w2, p) * h0);
            if (i >= 8 && (p - p0).norm() < h0) {
                L = static_cast<double>(i) * h0 + dot(p0 - p, level_tangent(w2, p));
                closed = true;
                break;
            }
        }
        if (!closed)
            throw ValidationError("level-set tracing did not close after " +
                                  std::to_string(max_steps) + " steps");
    }

    // Refinement: retrace with exactly n-1 steps and shrink the landing miss.
    const std::size_t n = spec.n;
    std::vector<double> zs(n), ws(n);
    double L_used = L;
    for (int iter = 0; iter < 8; ++iter) {
        L_used = L;
        const double hs = L / static_cast<double>(n - 1);
        Vec2 p = p0;
        zs[0] = p.x;
        ws[0] = p.y;
        for (std::size_t i = 1; i < n; ++i) {
            p = level_correct(w2, spec.M, p + level_tangent(w2, p) * hs);
            zs[i] = p.x;
            ws[i] = p.y;
        }
        const double miss = dot(p - p0, tan0);
        if (std::abs(miss) <= 1e-12 * std::max(1.0, L)) break;
        L -= miss;
    }
    log::debug("cmc_level_curve: period length " + std::to_string(L_used));

    TSCurve g;
    g.t = num::linspace(0.0, L_used, n);
    g.z = std::move(zs);
    g.w = std::move(ws);
    g.speed.assign(n, 1.0);
    g.z[n - 1] = g.z[0]; // one exact closed period
    g.w[n - 1] = g.w[0];

    // Exactly one orientation satisfies the range condition; flip if needed.
    try {
        const CompanionResult comp = companion_f(g);
        if (check_range(g, comp).accepted) return g;
    } catch (const NotATreadmillSled&) {
        // fall through to the reversed orientation
    }
    TSCurve rev;
    rev.t = g.t;
    rev.speed = g.speed;
    rev.z.resize(n);
    rev.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rev.z[i] = g.z[n - 1 - i];
        rev.w[i] = g.w[n - 1 - i];
    }
    const CompanionResult comp = companion_f(rev);
    if (!check_range(rev, comp).accepted)
        throw RangeViolation("level curve fails the range condition in both orientations");
    return rev;
}

SampledCurve cmc_profile(const CMCSpec& spec) {
    const TSCurve g = cmc_level_curve(spec);
    InverseResult inv = invert(g);
    return reparametrize_with_curvature(inv.alpha, g.t, inv.f, inv.range.margin,
                                        /*periodic_kappa=*/true);
}

SampledCurve flat_profile(const FlatSpec& spec) {
    if (spec.c == 0.0)
        throw ValidationError("flat profile: the trace segment lies on the vertical axis, "
                              "where the treadmill image degenerates to a point");
    if (spec.n < 5) throw ValidationError("flat profile: need at least 5 samples");
    if (spec.y0 == spec.y1) throw ValidationError("flat profile: empty ordinate range");
    if (!(spec.y0 * spec.y1 > 0.0))
        throw RangeViolation("flat profile: the trace segment meets the horizontal axis, "
                             "where the range margin vanishes");

    const std::size_t n = spec.n;
    TSCurve g;
    g.t = num::linspace(0.0, 1.0, n);
    g.z.assign(n, spec.c);
    g.w = num::linspace(spec.y0, spec.y1, n);
    g.speed.assign(n, std::abs(spec.y1 - spec.y0));

    InverseResult inv = invert(g); // RangeViolation here flags the wrong direction
    return reparametrize_with_curvature(inv.alpha, g.t, inv.f, inv.range.margin,
                                        /*periodic_kappa=*/false);
}

} // namespace treadmill
