// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "treadmill/curve.hpp"
#include "treadmill/helicoid.hpp"

namespace treadmill {

/// Profile generators for the three distinguished helicoidal-surface
/// families. Every generator returns a unit-speed profile with analytic
/// second derivatives attached, so the curvature checks downstream run at
/// full accuracy.

struct MinimalSpec {
    double w = 1.0;      ///< pitch, > 0
    double M = 1.0;      ///< conserved treadmill parameter, may be 0
    bool upper = true;   ///< hyperbola branch (sign of xi2)
    double s_span = 6.0; ///< arc-length extent, > 0
    std::size_t n = 4001; ///< samples (n - 1 RK4 steps)
};

/// Integrate the zero-mean-curvature profile equations
///   xi1' = w^2 xi2^2 / D - 1,  xi2' = -w^2 xi1 xi2 / D,
///   theta' = w^2 xi2 / D,      D = 1 + w^2 (xi1^2 + xi2^2)
/// by fixed-step RK4 from the treadmill vertex (xi1, xi2)(0) = (0, +-M),
/// theta(0) = 0, and reconstruct x = -xi1 cos theta + xi2 sin theta,
/// z = -xi1 sin theta - xi2 cos theta. The quantity xi2/sqrt(1 + w^2 xi1^2)
/// is conserved, so the treadmill image lies on the hyperbola
/// y^2/M^2 - w^2 x^2 = 1 (or on the x-axis when M = 0: the helicoid).
SampledCurve minimal_profile(const MinimalSpec& spec);

/// The same profile obtained without the ODE: parametrize the hyperbola
/// branch directly with x(t) = -t/(1 + w^2 M^2) (strictly decreasing, the
/// orientation with positive range margin -x'(1 + M^2 w^2)) and invert the
/// treadmill map. Agrees with minimal_profile up to a fixed rotation.
SampledCurve minimal_profile_via_inverse(const MinimalSpec& spec);

struct CMCSpec {
    double w = 1.0;       ///< pitch, > 0
    double M = 1.0;       ///< level parameter, > -1/4
    std::size_t n = 4001; ///< samples over one period of the trace
};

/// Profile of mean curvature one: trace the closed level curve
/// x^2 + y^2 - y/sqrt(1 + w^2 x^2) = M by predictor-corrector continuation
/// (Newton-corrected onto the level set, seeded at x = 0,
/// y = (1 + sqrt(1 + 4M))/2), orient it so the range condition holds, and
/// invert. The result is reparametrized to unit speed; its treadmill image
/// is the traced level curve.
SampledCurve cmc_profile(const CMCSpec& spec);

/// The traced level curve itself (one closed period, first == last sample),
/// oriented so invert() accepts it.
TSCurve cmc_level_curve(const CMCSpec& spec);

struct FlatSpec {
    double c = 1.0;   ///< trace abscissa, != 0
    double y0 = -2.0; ///< trace ordinate range; y0, y1 on the same side of 0
    double y1 = -1.0;
    std::size_t n = 1000; ///< samples
};

/// Profile whose helicoidal surface is flat (K = 0 for every pitch): the
/// treadmill image is the vertical segment z = c, y from y0 to y1. The
/// segment must avoid the y-axis (c != 0: ValidationError) and the x-axis
/// (y0*y1 > 0: RangeViolation, as is an orientation with y y'/c >= 0).
SampledCurve flat_profile(const FlatSpec& spec);

} // namespace treadmill
