// SPDX-License-Identifier: Apache-2.0
// NEON backend (aarch64, two doubles per lane). Compiled with
// -ffp-contract=off and built only from vmul/vadd/vsub/vdiv/vsqrt/vneg, so
// results are bit-identical to the scalar backend. Tails reuse the scalar
// expressions.

#include <cmath>
#include <cstddef>

#include "kernel_table.hpp"

#if defined(TREADMILL_HAVE_NEON)

#include <arm_neon.h>

namespace treadmill::kernels {
namespace {

void norms_neon(const double* tx, const double* ty, double* nrm, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t a = vld1q_f64(tx + i);
        const float64x2_t b = vld1q_f64(ty + i);
        vst1q_f64(nrm + i, vsqrtq_f64(vaddq_f64(vmulq_f64(a, a), vmulq_f64(b, b))));
    }
    for (; i < n; ++i) nrm[i] = std::sqrt(tx[i] * tx[i] + ty[i] * ty[i]);
}

void apply_rotation_neon(const double* c, const double* s, const double* x, const double* y,
                         double* ox, double* oy, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vc = vld1q_f64(c + i);
        const float64x2_t vs = vld1q_f64(s + i);
        const float64x2_t vx = vld1q_f64(x + i);
        const float64x2_t vy = vld1q_f64(y + i);
        const float64x2_t px = vaddq_f64(vmulq_f64(vc, vx), vmulq_f64(vs, vy));
        const float64x2_t py = vsubq_f64(vmulq_f64(vc, vy), vmulq_f64(vs, vx));
        vst1q_f64(ox + i, px);
        vst1q_f64(oy + i, py);
    }
    for (; i < n; ++i) {
        const double px = c[i] * x[i] + s[i] * y[i];
        const double py = c[i] * y[i] - s[i] * x[i];
        ox[i] = px;
        oy[i] = py;
    }
}

void apply_rotation_fixed_neon(double c, double s, const double* x, const double* y,
                               double* ox, double* oy, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vx = vld1q_f64(x + i);
        const float64x2_t vy = vld1q_f64(y + i);
        const float64x2_t px = vaddq_f64(vmulq_f64(vc, vx), vmulq_f64(vs, vy));
        const float64x2_t py = vsubq_f64(vmulq_f64(vc, vy), vmulq_f64(vs, vx));
        vst1q_f64(ox + i, px);
        vst1q_f64(oy + i, py);
    }
    for (; i < n; ++i) {
        const double px = c * x[i] + s * y[i];
        const double py = c * y[i] - s * x[i];
        ox[i] = px;
        oy[i] = py;
    }
}

void ts_transform_neon(const double* x, const double* y, const double* tx, const double* ty,
                       double* z, double* w, double* nrm, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t a = vld1q_f64(tx + i);
        const float64x2_t b = vld1q_f64(ty + i);
        const float64x2_t px = vld1q_f64(x + i);
        const float64x2_t py = vld1q_f64(y + i);
        const float64x2_t nr = vsqrtq_f64(vaddq_f64(vmulq_f64(a, a), vmulq_f64(b, b)));
        const float64x2_t vc = vnegq_f64(vdivq_f64(a, nr));
        const float64x2_t vs = vnegq_f64(vdivq_f64(b, nr));
        vst1q_f64(z + i, vaddq_f64(vmulq_f64(vc, px), vmulq_f64(vs, py)));
        vst1q_f64(w + i, vsubq_f64(vmulq_f64(vc, py), vmulq_f64(vs, px)));
        vst1q_f64(nrm + i, nr);
    }
    for (; i < n; ++i) {
        const double nr = std::sqrt(tx[i] * tx[i] + ty[i] * ty[i]);
        const double c = -(tx[i] / nr);
        const double s = -(ty[i] / nr);
        z[i] = c * x[i] + s * y[i];
        w[i] = c * y[i] - s * x[i];
        nrm[i] = nr;
    }
}

void cmc_residual_neon(const double* z, const double* w, double pitch, double M, double* r,
                       std::size_t n) {
    const double p2 = pitch * pitch;
    const float64x2_t vp2 = vdupq_n_f64(p2);
    const float64x2_t v1 = vdupq_n_f64(1.0);
    const float64x2_t vM = vdupq_n_f64(M);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vz = vld1q_f64(z + i);
        const float64x2_t vw = vld1q_f64(w + i);
        const float64x2_t zz = vmulq_f64(vz, vz);
        const float64x2_t r0 = vaddq_f64(zz, vmulq_f64(vw, vw));
        const float64x2_t q = vsqrtq_f64(vaddq_f64(v1, vmulq_f64(vp2, zz)));
        vst1q_f64(r + i, vsubq_f64(vsubq_f64(r0, vdivq_f64(vw, q)), vM));
    }
    for (; i < n; ++i) {
        const double zz = z[i] * z[i];
        const double r0 = zz + w[i] * w[i];
        const double q = std::sqrt(1.0 + p2 * zz);
        r[i] = r0 - w[i] / q - M;
    }
}

void mean_curvature_neon(const double* z, const double* w, const double* thp, double pitch,
                         double* H, std::size_t n) {
    const double p2 = pitch * pitch;
    const float64x2_t vp2 = vdupq_n_f64(p2);
    const float64x2_t v1 = vdupq_n_f64(1.0);
    const float64x2_t v2 = vdupq_n_f64(2.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vz = vld1q_f64(z + i);
        const float64x2_t vw = vld1q_f64(w + i);
        const float64x2_t vt = vld1q_f64(thp + i);
        const float64x2_t zz = vmulq_f64(vz, vz);
        const float64x2_t sq = vaddq_f64(zz, vmulq_f64(vw, vw));
        const float64x2_t num = vaddq_f64(
            vnegq_f64(vmulq_f64(vp2, vw)), vmulq_f64(vt, vaddq_f64(v1, vmulq_f64(vp2, sq))));
        const float64x2_t base = vaddq_f64(v1, vmulq_f64(vp2, zz));
        const float64x2_t den = vmulq_f64(v2, vmulq_f64(base, vsqrtq_f64(base)));
        vst1q_f64(H + i, vdivq_f64(num, den));
    }
    for (; i < n; ++i) {
        const double zz = z[i] * z[i];
        const double num = -(p2 * w[i]) + thp[i] * (1.0 + p2 * (zz + w[i] * w[i]));
        const double base = 1.0 + p2 * zz;
        const double den = 2.0 * (base * std::sqrt(base));
        H[i] = num / den;
    }
}

} // namespace

const KernelTable& neon_table() {
    static const KernelTable table{norms_neon,        apply_rotation_neon,
                                   apply_rotation_fixed_neon, ts_transform_neon,
                                   cmc_residual_neon, mean_curvature_neon};
    return table;
}

} // namespace treadmill::kernels

#endif // TREADMILL_HAVE_NEON
