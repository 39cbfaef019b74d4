// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

// Internal dispatch table shared by the kernel backends. Every backend fills
// one of these with functions that perform identical IEEE operations in
// identical order (multiply, add, subtract, divide, sqrt, sign flip -- never
// fused multiply-add), which is what makes the backends bit-compatible.

namespace treadmill::kernels {

struct KernelTable {
    void (*norms)(const double*, const double*, double*, std::size_t);
    void (*apply_rotation)(const double*, const double*, const double*, const double*,
                           double*, double*, std::size_t);
    void (*apply_rotation_fixed)(double, double, const double*, const double*, double*,
                                 double*, std::size_t);
    void (*ts_transform)(const double*, const double*, const double*, const double*, double*,
                         double*, double*, std::size_t);
    void (*cmc_residual)(const double*, const double*, double, double, double*, std::size_t);
    void (*mean_curvature)(const double*, const double*, const double*, double, double*,
                           std::size_t);
};

#if defined(TREADMILL_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(TREADMILL_HAVE_NEON)
const KernelTable& neon_table();
#endif

} // namespace treadmill::kernels
