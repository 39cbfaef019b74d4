// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treadmill/treadmill.hpp"

namespace treadmill {

/// The companion function f with w' = -f z along a trace, recovered as
/// f = -w'/z away from the vertical axis (5-point grid differences; periodic
/// stencils when the trace is closed). Samples on the axis (|z| <= kEpsAxis)
/// must have vanishing horizontal velocity -- otherwise the trace is not a
/// treadmill image -- and are filled by the limit -w''/z'; samples too close
/// to the axis for the ratio to be well conditioned (|z| below one grid step
/// times |z'|) are filled by linear interpolation from their healthy
/// neighbors. `filled` flags every interpolated or limit-filled sample.
struct CompanionResult {
    std::vector<double> f;
    std::vector<double> zp, wp; ///< grid derivatives of the trace
    std::vector<std::uint8_t> filled;
};
CompanionResult companion_f(const TSCurve& g);

/// Margin report for the range condition w*f - z' > 0.
struct RangeReport {
    std::vector<double> margin; ///< w*f - z' per sample (the source speed)
    double min_margin = 0.0;
    std::size_t argmin = 0;
    bool accepted = false; ///< min_margin > kDeltaPos
};
RangeReport check_range(const TSCurve& g, const CompanionResult& comp);

struct InvertOptions {
    /// Supply f explicitly (one value per sample). Required for constant
    /// traces, where the companion function is not determined by the data.
    std::optional<std::vector<double>> f_override;
    /// Constant added to the antiderivative F. Different choices produce the
    /// rotated family A(-offset) applied to the offset-zero result.
    double antiderivative_offset = 0.0;
};

/// Reconstruction of a curve from its treadmill image:
/// alpha(t) = -A(-F(t)) gamma(t) with F the cumulative trapezoid of f
/// (F(a) = antiderivative_offset), tangents -A(-F)(f J gamma + gamma').
/// The speed of the result is the range margin f w - z'.
/// Throws ConstantCurve for point traces without f_override, NotATreadmillSled
/// for axis crossings with nonzero horizontal velocity, RangeViolation when
/// the margin is not strictly positive.
struct InverseResult {
    SampledCurve alpha;
    std::vector<double> f, F;
    RangeReport range;
};
InverseResult invert(const TSCurve& g, const InvertOptions& opt = {});

} // namespace treadmill
