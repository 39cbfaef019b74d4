// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

// Elementwise kernels over coordinate arrays. Each kernel has a scalar
// reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at runtime. Every variant performs the same IEEE
// operations in the same order and none uses fused multiply-add, so all
// backends produce bit-identical results; the equivalence tests assert
// exact equality.

namespace treadmill::kernels {

enum class Backend { scalar, avx2, neon };

/// Backend chosen at startup: the widest one the CPU supports, unless the
/// TREADMILL_SIMD environment variable (scalar|avx2|neon) says otherwise.
Backend active();

/// Force a backend; returns false (leaving the selection unchanged) when the
/// CPU cannot run it.
bool set_backend(Backend b);

const char* backend_name(Backend b);

/// True when this build/CPU can execute the given backend.
bool supported(Backend b);

/// nrm[i] = sqrt(tx[i]^2 + ty[i]^2)
void norms(const double* tx, const double* ty, double* nrm, std::size_t n);

/// Apply the rotation with row (c[i], s[i]) per sample:
/// ox[i] = c[i]*x[i] + s[i]*y[i], oy[i] = c[i]*y[i] - s[i]*x[i].
/// This is A(tau_i) with c = cos tau_i, s = sin tau_i.
void apply_rotation(const double* c, const double* s, const double* x, const double* y,
                    double* ox, double* oy, std::size_t n);

/// Same with a single fixed angle.
void apply_rotation_fixed(double c, double s, const double* x, const double* y,
                          double* ox, double* oy, std::size_t n);

/// The treadmill transform of samples with positions (x, y) and tangents
/// (tx, ty). With nrm = |tangent| and c = -(tx/nrm), s = -(ty/nrm), writes
/// z = c*x + s*y and w = c*y - s*x (the rotation A(rho + pi) applied to the
/// position, staged exactly like apply_rotation so the phi-treadmill at
/// phi = 0 reproduces it bit for bit), plus the speeds nrm.
void ts_transform(const double* x, const double* y, const double* tx, const double* ty,
                  double* z, double* w, double* nrm, std::size_t n);

/// r[i] = z[i]^2 + w[i]^2 - w[i]/sqrt(1 + pitch^2 z[i]^2) - M
void cmc_residual(const double* z, const double* w, double pitch, double M,
                  double* r, std::size_t n);

/// H[i] = (-pitch^2 w[i] + thp[i]*(1 + pitch^2 (z[i]^2 + w[i]^2)))
///        / (2 (1 + pitch^2 z[i]^2)^{3/2})
void mean_curvature(const double* z, const double* w, const double* thp, double pitch,
                    double* H, std::size_t n);

} // namespace treadmill::kernels
