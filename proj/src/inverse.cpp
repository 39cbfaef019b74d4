// SPDX-License-Identifier: Apache-2.0
#include "treadmill/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "treadmill/errors.hpp"
#include "treadmill/kernels.hpp"
#include "treadmill/log.hpp"
#include "treadmill/numerics.hpp"

namespace treadmill {
namespace {

void validate_trace(const TSCurve& g) {
    const std::size_t n = g.t.size();
    if (n < 5) throw ValidationError("trace needs at least 5 samples");
    if (g.z.size() != n || g.w.size() != n)
        throw ValidationError("trace arrays have different lengths");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(g.t[i] < g.t[i + 1]))
            throw ValidationError("trace parameters must be strictly increasing");
}

bool grid_uniform(const std::vector<double>& t) {
    const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (std::abs((t[i + 1] - t[i]) - h) > 1e-6 * std::abs(h)) return false;
    return true;
}

double trace_diameter(const TSCurve& g) {
    double zmin = g.z[0], zmax = g.z[0], wmin = g.w[0], wmax = g.w[0];
    for (std::size_t i = 1; i < g.size(); ++i) {
        zmin = std::min(zmin, g.z[i]);
        zmax = std::max(zmax, g.z[i]);
        wmin = std::min(wmin, g.w[i]);
        wmax = std::max(wmax, g.w[i]);
    }
    return std::max(zmax - zmin, wmax - wmin);
}

/// A trace whose endpoints coincide (relative to its diameter) is treated as
/// one closed period, provided the grid is uniform enough for wrapping
/// stencils.
bool trace_closed(const TSCurve& g, double diam) {
    const std::size_t n = g.size();
    const double tol = 1e-8 * std::max(diam, 1e-300);
    return std::abs(g.z[0] - g.z[n - 1]) <= tol && std::abs(g.w[0] - g.w[n - 1]) <= tol &&
           g.t.size() >= 6 && grid_uniform(g.t);
}

void trace_derivs(const TSCurve& g, bool closed, std::vector<double>& zp,
                  std::vector<double>& wp) {
    zp = closed ? num::deriv1_periodic(g.t, g.z) : num::deriv1(g.t, g.z);
    wp = closed ? num::deriv1_periodic(g.t, g.w) : num::deriv1(g.t, g.w);
}

} // namespace

CompanionResult companion_f(const TSCurve& g) {
    validate_trace(g);
    const std::size_t n = g.size();
    const double diam = trace_diameter(g);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max({scale, std::abs(g.z[i]), std::abs(g.w[i])});
    if (diam <= 1e-13 * (1.0 + scale))
        throw ConstantCurve("trace is a single point; the companion function is "
                            "underdetermined, supply it explicitly");

    const bool closed = trace_closed(g, diam);
    CompanionResult r;
    trace_derivs(g, closed, r.zp, r.wp);
    r.f.assign(n, 0.0);
    r.filled.assign(n, 0);

    double max_wp = 0.0;
    for (double v : r.wp) max_wp = std::max(max_wp, std::abs(v));
    const double eps_removable = 1e-6 * max_wp;

    std::vector<double> wpp; // computed only if an axis sample needs the limit
    std::vector<std::uint8_t> anchor(n, 0);
    std::size_t n_axis = 0, n_window = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = g.z[i];
        const double h_loc = (i + 1 < n) ? g.t[i + 1] - g.t[i] : g.t[i] - g.t[i - 1];
        if (std::abs(z) <= kEpsAxis) {
            if (std::abs(r.wp[i]) > eps_removable)
                throw NotATreadmillSled(
                    "trace crosses the vertical axis with nonvanishing horizontal velocity "
                    "at t = " + std::to_string(g.t[i]) + " (|w'| = " + std::to_string(std::abs(r.wp[i])) +
                    "); no regular curve has this treadmill image");
            if (wpp.empty())
                wpp = closed ? num::deriv2_periodic(g.t, g.w) : num::deriv2(g.t, g.w);
            if (std::abs(r.zp[i]) > kEpsReg) {
                r.f[i] = -wpp[i] / r.zp[i]; // limit of -w'/z across the axis
                anchor[i] = 1;
            }
            r.filled[i] = 1;
            ++n_axis;
        } else if (std::abs(z) <= h_loc * std::abs(r.zp[i])) {
            // Within one grid step of the axis the ratio loses its leading
            // digits; fill from the neighbors instead.
            r.filled[i] = 1;
            ++n_window;
        } else {
            r.f[i] = -r.wp[i] / z;
            anchor[i] = 1;
        }
    }

    // Linear interpolation (in t) of the unfilled samples between anchors;
    // clamp to the nearest anchor beyond the ends.
    std::vector<std::size_t> anchors;
    for (std::size_t i = 0; i < n; ++i)
        if (anchor[i]) anchors.push_back(i);
    if (anchors.empty())
        throw ValidationError("companion function is underdetermined: every sample sits in "
                              "the ill-conditioned band around the vertical axis; supply f "
                              "explicitly");
    for (std::size_t i = 0; i < n; ++i) {
        if (anchor[i] || !r.filled[i]) continue;
        auto it = std::lower_bound(anchors.begin(), anchors.end(), i);
        if (it == anchors.begin()) {
            r.f[i] = r.f[anchors.front()];
        } else if (it == anchors.end()) {
            r.f[i] = r.f[anchors.back()];
        } else {
            const std::size_t hi = *it, lo = *(it - 1);
            const double u = (g.t[i] - g.t[lo]) / (g.t[hi] - g.t[lo]);
            r.f[i] = (1.0 - u) * r.f[lo] + u * r.f[hi];
        }
    }
    if (n_axis + n_window > 0)
        log::debug("companion_f: " + std::to_string(n_axis) + " axis samples, " +
                   std::to_string(n_window) + " window samples filled" +
                   (closed ? " (closed trace)" : ""));
    return r;
}

RangeReport check_range(const TSCurve& g, const CompanionResult& comp) {
    const std::size_t n = g.size();
    if (comp.f.size() != n || comp.zp.size() != n)
        throw ValidationError("check_range: companion data does not match the trace");
    RangeReport rep;
    rep.margin.resize(n);
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        rep.margin[i] = g.w[i] * comp.f[i] - comp.zp[i];
        if (rep.margin[i] < rep.min_margin) {
            rep.min_margin = rep.margin[i];
            rep.argmin = i;
        }
    }
    rep.accepted = rep.min_margin > kDeltaPos;
    return rep;
}

InverseResult invert(const TSCurve& g, const InvertOptions& opt) {
    validate_trace(g);
    const std::size_t n = g.size();

    CompanionResult comp;
    if (opt.f_override) {
        if (opt.f_override->size() != n)
            throw ValidationError("invert: f override needs one value per sample");
        comp.f = *opt.f_override;
        comp.filled.assign(n, 0);
        trace_derivs(g, trace_closed(g, trace_diameter(g)), comp.zp, comp.wp);
    } else {
        comp = companion_f(g);
    }

    RangeReport range = check_range(g, comp);
    if (!range.accepted)
        throw RangeViolation("range condition w*f - z' > 0 fails: minimum margin " +
                             std::to_string(range.min_margin) + " at t = " +
                             std::to_string(g.t[range.argmin]));

    std::vector<double> F = num::cumtrapz(g.t, comp.f);
    if (opt.antiderivative_offset != 0.0)
        for (double& v : F) v += opt.antiderivative_offset;

    // alpha = -A(-F) gamma and alpha' = -A(-F)(f J gamma + gamma').
    // A(-F) is the rotation kernel with rows (cos F, -sin F).
    std::vector<double> cF(n), msF(n), ux(n), uy(n);
    for (std::size_t i = 0; i < n; ++i) {
        cF[i] = std::cos(F[i]);
        msF[i] = -std::sin(F[i]);
        ux[i] = comp.f[i] * (-g.w[i]) + comp.zp[i];
        uy[i] = comp.f[i] * g.z[i] + comp.wp[i];
    }

    InverseResult out;
    out.alpha.t = g.t;
    out.alpha.x.resize(n);
    out.alpha.y.resize(n);
    out.alpha.tx.resize(n);
    out.alpha.ty.resize(n);
    kernels::apply_rotation(cF.data(), msF.data(), g.z.data(), g.w.data(), out.alpha.x.data(),
                            out.alpha.y.data(), n);
    kernels::apply_rotation(cF.data(), msF.data(), ux.data(), uy.data(), out.alpha.tx.data(),
                            out.alpha.ty.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
        out.alpha.x[i] = -out.alpha.x[i];
        out.alpha.y[i] = -out.alpha.y[i];
        out.alpha.tx[i] = -out.alpha.tx[i];
        out.alpha.ty[i] = -out.alpha.ty[i];
    }
    validate_curve(out.alpha);
    out.f = std::move(comp.f);
    out.F = std::move(F);
    out.range = std::move(range);
    return out;
}

} // namespace treadmill
