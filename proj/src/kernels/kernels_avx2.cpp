// SPDX-License-Identifier: Apache-2.0
// AVX2 backend. Compiled with -mavx2 and -ffp-contract=off only; no FMA is
// emitted, so every lane performs the same correctly rounded operations as
// the scalar backend and results are bit-identical. Tails reuse the scalar
// expressions. Vector constants are built inside the functions so that no
// AVX instruction runs during static initialization on non-AVX hosts.

#include <cmath>
#include <cstddef>

#include "kernel_table.hpp"

#if defined(TREADMILL_HAVE_AVX2)

#include <immintrin.h>

namespace treadmill::kernels {
namespace {

inline __m256d neg(__m256d v) { return _mm256_xor_pd(v, _mm256_set1_pd(-0.0)); }

void norms_avx2(const double* tx, const double* ty, double* nrm, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(tx + i);
        const __m256d b = _mm256_loadu_pd(ty + i);
        const __m256d s = _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        _mm256_storeu_pd(nrm + i, _mm256_sqrt_pd(s));
    }
    for (; i < n; ++i) nrm[i] = std::sqrt(tx[i] * tx[i] + ty[i] * ty[i]);
}

void apply_rotation_avx2(const double* c, const double* s, const double* x, const double* y,
                         double* ox, double* oy, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vc = _mm256_loadu_pd(c + i);
        const __m256d vs = _mm256_loadu_pd(s + i);
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d px = _mm256_add_pd(_mm256_mul_pd(vc, vx), _mm256_mul_pd(vs, vy));
        const __m256d py = _mm256_sub_pd(_mm256_mul_pd(vc, vy), _mm256_mul_pd(vs, vx));
        _mm256_storeu_pd(ox + i, px);
        _mm256_storeu_pd(oy + i, py);
    }
    for (; i < n; ++i) {
        const double px = c[i] * x[i] + s[i] * y[i];
        const double py = c[i] * y[i] - s[i] * x[i];
        ox[i] = px;
        oy[i] = py;
    }
}

void apply_rotation_fixed_avx2(double c, double s, const double* x, const double* y,
                               double* ox, double* oy, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d px = _mm256_add_pd(_mm256_mul_pd(vc, vx), _mm256_mul_pd(vs, vy));
        const __m256d py = _mm256_sub_pd(_mm256_mul_pd(vc, vy), _mm256_mul_pd(vs, vx));
        _mm256_storeu_pd(ox + i, px);
        _mm256_storeu_pd(oy + i, py);
    }
    for (; i < n; ++i) {
        const double px = c * x[i] + s * y[i];
        const double py = c * y[i] - s * x[i];
        ox[i] = px;
        oy[i] = py;
    }
}

void ts_transform_avx2(const double* x, const double* y, const double* tx, const double* ty,
                       double* z, double* w, double* nrm, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(tx + i);
        const __m256d b = _mm256_loadu_pd(ty + i);
        const __m256d px = _mm256_loadu_pd(x + i);
        const __m256d py = _mm256_loadu_pd(y + i);
        const __m256d nr = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b)));
        const __m256d vc = neg(_mm256_div_pd(a, nr));
        const __m256d vs = neg(_mm256_div_pd(b, nr));
        const __m256d vz = _mm256_add_pd(_mm256_mul_pd(vc, px), _mm256_mul_pd(vs, py));
        const __m256d vw = _mm256_sub_pd(_mm256_mul_pd(vc, py), _mm256_mul_pd(vs, px));
        _mm256_storeu_pd(z + i, vz);
        _mm256_storeu_pd(w + i, vw);
        _mm256_storeu_pd(nrm + i, nr);
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

void cmc_residual_avx2(const double* z, const double* w, double pitch, double M, double* r,
                       std::size_t n) {
    const double p2 = pitch * pitch;
    const __m256d vp2 = _mm256_set1_pd(p2);
    const __m256d v1 = _mm256_set1_pd(1.0);
    const __m256d vM = _mm256_set1_pd(M);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vz = _mm256_loadu_pd(z + i);
        const __m256d vw = _mm256_loadu_pd(w + i);
        const __m256d zz = _mm256_mul_pd(vz, vz);
        const __m256d r0 = _mm256_add_pd(zz, _mm256_mul_pd(vw, vw));
        const __m256d q = _mm256_sqrt_pd(_mm256_add_pd(v1, _mm256_mul_pd(vp2, zz)));
        const __m256d res = _mm256_sub_pd(_mm256_sub_pd(r0, _mm256_div_pd(vw, q)), vM);
        _mm256_storeu_pd(r + i, res);
    }
    for (; i < n; ++i) {
        const double zz = z[i] * z[i];
        const double r0 = zz + w[i] * w[i];
        const double q = std::sqrt(1.0 + p2 * zz);
        r[i] = r0 - w[i] / q - M;
    }
}

void mean_curvature_avx2(const double* z, const double* w, const double* thp, double pitch,
                         double* H, std::size_t n) {
    const double p2 = pitch * pitch;
    const __m256d vp2 = _mm256_set1_pd(p2);
    const __m256d v1 = _mm256_set1_pd(1.0);
    const __m256d v2 = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vz = _mm256_loadu_pd(z + i);
        const __m256d vw = _mm256_loadu_pd(w + i);
        const __m256d vt = _mm256_loadu_pd(thp + i);
        const __m256d zz = _mm256_mul_pd(vz, vz);
        const __m256d sq = _mm256_add_pd(zz, _mm256_mul_pd(vw, vw));
        const __m256d num = _mm256_add_pd(
            neg(_mm256_mul_pd(vp2, vw)),
            _mm256_mul_pd(vt, _mm256_add_pd(v1, _mm256_mul_pd(vp2, sq))));
        const __m256d base = _mm256_add_pd(v1, _mm256_mul_pd(vp2, zz));
        const __m256d den = _mm256_mul_pd(v2, _mm256_mul_pd(base, _mm256_sqrt_pd(base)));
        _mm256_storeu_pd(H + i, _mm256_div_pd(num, den));
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

const KernelTable& avx2_table() {
    static const KernelTable table{norms_avx2,        apply_rotation_avx2,
                                   apply_rotation_fixed_avx2, ts_transform_avx2,
                                   cmc_residual_avx2, mean_curvature_avx2};
    return table;
}

} // namespace treadmill::kernels

#endif // TREADMILL_HAVE_AVX2
