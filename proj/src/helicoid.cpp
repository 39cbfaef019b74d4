// SPDX-License-Identifier: Apache-2.0
#include "treadmill/helicoid.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "treadmill/errors.hpp"
#include "treadmill/kernels.hpp"
#include "treadmill/numerics.hpp"

namespace treadmill {
namespace {

void require_pitch(HelicoidalParams p) {
    if (!(p.w > 0.0)) throw ValidationError("pitch w must be strictly positive");
}

void require_unit_speed(const SampledCurve& profile, const char* who) {
    std::vector<double> nr(profile.size());
    kernels::norms(profile.tx.data(), profile.ty.data(), nr.data(), profile.size());
    for (std::size_t i = 0; i < nr.size(); ++i)
        if (std::abs(nr[i] - 1.0) > 1e-6)
            throw ValidationError(std::string(who) + ": profile must be unit-speed (|tangent| = " +
                                  std::to_string(nr[i]) + " at sample " + std::to_string(i) + ")");
}

double uniform_step_checked(const std::vector<double>& v, const char* who) {
    if (v.size() < 2) throw ValidationError(std::string(who) + ": grid too small");
    const double h = (v.back() - v.front()) / static_cast<double>(v.size() - 1);
    if (!(h > 0.0)) throw ValidationError(std::string(who) + ": grid must be increasing");
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (std::abs((v[i + 1] - v[i]) - h) > 1e-6 * h)
            throw ValidationError(std::string(who) + ": grid must be uniform");
    return h;
}

} // namespace

SurfaceMesh immerse(const SampledCurve& profile, HelicoidalParams p, double t0, double t1,
                    std::size_t nt) {
    validate_curve(profile);
    require_pitch(p);
    if (nt < 2) throw ValidationError("immerse: need at least 2 screw samples");
    if (!(t1 > t0)) throw ValidationError("immerse: need t1 > t0");

    SurfaceMesh m;
    m.s = profile.t;
    m.t = num::linspace(t0, t1, nt);
    const std::size_t ns = m.s.size();
    m.X.resize(ns * nt);
    m.Y.resize(ns * nt);
    m.Z.resize(ns * nt);
    for (std::size_t j = 0; j < nt; ++j) {
        const double wt = p.w * m.t[j];
        const double cwt = std::cos(wt), swt = std::sin(wt);
        for (std::size_t i = 0; i < ns; ++i) {
            const std::size_t k = m.idx(i, j);
            const double x = profile.x[i], z = profile.y[i];
            m.X[k] = x * cwt + z * swt;
            m.Y[k] = m.t[j];
            m.Z[k] = -x * swt + z * cwt;
        }
    }
    return m;
}

void gauss_map(const SampledCurve& profile, const TurningAngle& theta, const TSCurve& sled,
               HelicoidalParams p, SurfaceMesh& mesh) {
    require_pitch(p);
    require_unit_speed(profile, "gauss_map");
    const std::size_t ns = mesh.ns(), nt = mesh.nt();
    if (profile.size() != ns || theta.rho.size() != ns || sled.size() != ns)
        throw ValidationError("gauss_map: profile, angle, and sled must match the mesh rows");
    mesh.NX.resize(ns * nt);
    mesh.NY.resize(ns * nt);
    mesh.NZ.resize(ns * nt);
    for (std::size_t i = 0; i < ns; ++i) {
        const double xi1 = sled.z[i];
        const double q = std::sqrt(1.0 + p.w * p.w * xi1 * xi1);
        const double ny = -(p.w * xi1) / q;
        for (std::size_t j = 0; j < nt; ++j) {
            const double a = p.w * mesh.t[j] - theta.rho[i];
            const std::size_t k = mesh.idx(i, j);
            mesh.NX[k] = std::sin(a) / q;
            mesh.NY[k] = ny;
            mesh.NZ[k] = std::cos(a) / q;
        }
    }
}

FundForms fundamental_forms_analytic(const SampledCurve& profile, HelicoidalParams p) {
    validate_curve(profile);
    require_pitch(p);
    require_unit_speed(profile, "fundamental_forms_analytic");
    const std::size_t n = profile.size();
    const TSCurve sled = ts(profile);
    const std::vector<double> thp = curvature(profile);
    FundForms ff;
    ff.E.assign(n, 1.0);
    ff.F.resize(n);
    ff.G.resize(n);
    ff.e.resize(n);
    ff.f.resize(n);
    ff.g.resize(n);
    const double w2 = p.w * p.w;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi1 = sled.z[i], xi2 = sled.w[i];
        const double q = std::sqrt(1.0 + w2 * xi1 * xi1);
        ff.F[i] = -p.w * xi2;
        ff.G[i] = 1.0 + w2 * (xi1 * xi1 + xi2 * xi2);
        ff.e[i] = thp[i] / q;
        ff.f[i] = -p.w / q;
        ff.g[i] = w2 * xi2 / q;
    }
    return ff;
}

std::vector<double> mean_curvature_analytic(const SampledCurve& profile, HelicoidalParams p) {
    validate_curve(profile);
    require_pitch(p);
    require_unit_speed(profile, "mean_curvature_analytic");
    const std::size_t n = profile.size();
    const TSCurve sled = ts(profile);
    const std::vector<double> thp = curvature(profile);
    std::vector<double> H(n);
    kernels::mean_curvature(sled.z.data(), sled.w.data(), thp.data(), p.w, H.data(), n);
    return H;
}

CurvatureGrid curvatures_fd(const SurfaceMesh& mesh) {
    const std::size_t ns = mesh.ns(), nt = mesh.nt();
    if (ns < 3 || nt < 3)
        throw ValidationError("curvatures_fd: need at least a 3x3 grid for interior nodes");
    const double hs = uniform_step_checked(mesh.s, "curvatures_fd (s grid)");
    const double ht = uniform_step_checked(mesh.t, "curvatures_fd (t grid)");

    CurvatureGrid grid;
    grid.ns = ns;
    grid.nt = nt;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    grid.H.assign(ns * nt, nan);
    grid.K.assign(ns * nt, nan);
    grid.valid.assign(ns * nt, 0);

    auto P = [&](std::size_t i, std::size_t j) { return mesh.point(i, j); };
    for (std::size_t i = 1; i + 1 < ns; ++i) {
        for (std::size_t j = 1; j + 1 < nt; ++j) {
            const Vec3 Ps = (P(i + 1, j) - P(i - 1, j)) * (1.0 / (2.0 * hs));
            const Vec3 Pt = (P(i, j + 1) - P(i, j - 1)) * (1.0 / (2.0 * ht));
            const Vec3 Pss = (P(i + 1, j) - P(i, j) * 2.0 + P(i - 1, j)) * (1.0 / (hs * hs));
            const Vec3 Ptt = (P(i, j + 1) - P(i, j) * 2.0 + P(i, j - 1)) * (1.0 / (ht * ht));
            const Vec3 Pst = (P(i + 1, j + 1) - P(i + 1, j - 1) - P(i - 1, j + 1) +
                              P(i - 1, j - 1)) *
                             (1.0 / (4.0 * hs * ht));
            const double E = dot(Ps, Ps), F = dot(Ps, Pt), G = dot(Pt, Pt);
            const double den = E * G - F * F;
            if (!(den > 0.0))
                throw DegenerateMetric("first fundamental form is singular at grid node (" +
                                       std::to_string(i) + ", " + std::to_string(j) + ")");
            Vec3 nrm = cross(Ps, Pt);
            nrm = nrm * (1.0 / nrm.norm());
            const double e = dot(Pss, nrm), f = dot(Pst, nrm), g = dot(Ptt, nrm);
            const std::size_t k = grid.idx(i, j);
            grid.H[k] = (e * G - 2.0 * f * F + g * E) / (2.0 * den);
            grid.K[k] = (e * g - f * f) / den;
            grid.valid[k] = 1;
        }
    }
    return grid;
}

std::vector<double> cmc_residual(const TSCurve& g, HelicoidalParams p, double M) {
    require_pitch(p);
    std::vector<double> r(g.size());
    kernels::cmc_residual(g.z.data(), g.w.data(), p.w, M, r.data(), g.size());
    return r;
}

} // namespace treadmill
