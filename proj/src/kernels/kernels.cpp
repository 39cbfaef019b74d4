// SPDX-License-Identifier: Apache-2.0
#include "treadmill/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "kernel_table.hpp"

namespace treadmill::kernels {
namespace {

// ---- scalar reference backend ------------------------------------------

void norms_scalar(const double* tx, const double* ty, double* nrm, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) nrm[i] = std::sqrt(tx[i] * tx[i] + ty[i] * ty[i]);
}

void apply_rotation_scalar(const double* c, const double* s, const double* x, const double* y,
                           double* ox, double* oy, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double px = c[i] * x[i] + s[i] * y[i];
        const double py = c[i] * y[i] - s[i] * x[i];
        ox[i] = px;
        oy[i] = py;
    }
}

void apply_rotation_fixed_scalar(double c, double s, const double* x, const double* y,
                                 double* ox, double* oy, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double px = c * x[i] + s * y[i];
        const double py = c * y[i] - s * x[i];
        ox[i] = px;
        oy[i] = py;
    }
}

void ts_transform_scalar(const double* x, const double* y, const double* tx, const double* ty,
                         double* z, double* w, double* nrm, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double nr = std::sqrt(tx[i] * tx[i] + ty[i] * ty[i]);
        const double c = -(tx[i] / nr);
        const double s = -(ty[i] / nr);
        z[i] = c * x[i] + s * y[i];
        w[i] = c * y[i] - s * x[i];
        nrm[i] = nr;
    }
}

void cmc_residual_scalar(const double* z, const double* w, double pitch, double M, double* r,
                         std::size_t n) {
    const double p2 = pitch * pitch;
    for (std::size_t i = 0; i < n; ++i) {
        const double zz = z[i] * z[i];
        const double r0 = zz + w[i] * w[i];
        const double q = std::sqrt(1.0 + p2 * zz);
        r[i] = r0 - w[i] / q - M;
    }
}

void mean_curvature_scalar(const double* z, const double* w, const double* thp, double pitch,
                           double* H, std::size_t n) {
    const double p2 = pitch * pitch;
    for (std::size_t i = 0; i < n; ++i) {
        const double zz = z[i] * z[i];
        const double num = -(p2 * w[i]) + thp[i] * (1.0 + p2 * (zz + w[i] * w[i]));
        const double base = 1.0 + p2 * zz;
        const double den = 2.0 * (base * std::sqrt(base));
        H[i] = num / den;
    }
}

const KernelTable kScalarTable{norms_scalar,        apply_rotation_scalar,
                               apply_rotation_fixed_scalar, ts_transform_scalar,
                               cmc_residual_scalar, mean_curvature_scalar};

// ---- backend selection ---------------------------------------------------

const KernelTable* table_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return &kScalarTable;
#if defined(TREADMILL_HAVE_AVX2)
        case Backend::avx2:
            return &avx2_table();
#endif
#if defined(TREADMILL_HAVE_NEON)
        case Backend::neon:
            return &neon_table();
#endif
        default:
            return nullptr;
    }
}

Backend parse_backend(const std::string& s, bool& ok) {
    ok = true;
    if (s == "scalar") return Backend::scalar;
    if (s == "avx2") return Backend::avx2;
    if (s == "neon") return Backend::neon;
    ok = false;
    return Backend::scalar;
}

Backend detect_backend() {
    if (const char* e = std::getenv("TREADMILL_SIMD")) {
        bool ok = false;
        const Backend req = parse_backend(e, ok);
        if (ok && supported(req)) return req;
        // Unknown or unsupported request: fall through to auto-detection.
    }
#if defined(TREADMILL_HAVE_AVX2)
    if (supported(Backend::avx2)) return Backend::avx2;
#endif
#if defined(TREADMILL_HAVE_NEON)
    if (supported(Backend::neon)) return Backend::neon;
#endif
    return Backend::scalar;
}

struct Dispatch {
    const KernelTable* table;
    Backend backend;
    Dispatch() : backend(detect_backend()) { table = table_for(backend); }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

} // namespace

Backend active() { return dispatch().backend; }

bool supported(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(TREADMILL_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::neon:
#if defined(TREADMILL_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

bool set_backend(Backend b) {
    if (!supported(b)) return false;
    dispatch().table = table_for(b);
    dispatch().backend = b;
    return true;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "unknown";
}

void norms(const double* tx, const double* ty, double* nrm, std::size_t n) {
    dispatch().table->norms(tx, ty, nrm, n);
}

void apply_rotation(const double* c, const double* s, const double* x, const double* y,
                    double* ox, double* oy, std::size_t n) {
    dispatch().table->apply_rotation(c, s, x, y, ox, oy, n);
}

void apply_rotation_fixed(double c, double s, const double* x, const double* y, double* ox,
                          double* oy, std::size_t n) {
    dispatch().table->apply_rotation_fixed(c, s, x, y, ox, oy, n);
}

void ts_transform(const double* x, const double* y, const double* tx, const double* ty,
                  double* z, double* w, double* nrm, std::size_t n) {
    dispatch().table->ts_transform(x, y, tx, ty, z, w, nrm, n);
}

void cmc_residual(const double* z, const double* w, double pitch, double M, double* r,
                  std::size_t n) {
    dispatch().table->cmc_residual(z, w, pitch, M, r, n);
}

void mean_curvature(const double* z, const double* w, const double* thp, double pitch,
                    double* H, std::size_t n) {
    dispatch().table->mean_curvature(z, w, thp, pitch, H, n);
}

} // namespace treadmill::kernels
