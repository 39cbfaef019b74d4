// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "treadmill/curve.hpp"

namespace treadmill {

/// The treadmill image of a curve: trace samples (z, w) over the source
/// parameters, with the source speeds |alpha'| kept alongside.
struct TSCurve {
    std::vector<double> t;
    std::vector<double> z, w;
    std::vector<double> speed;

    std::size_t size() const { return t.size(); }
    Vec2 point(std::size_t i) const { return {z[i], w[i]}; }
};

/// TS(alpha)(t) = ( (-x'x - y'y)/|alpha'|, (x y' - y x')/|alpha'| ).
/// Independent of orientation-preserving reparametrization; rotating the
/// input curve leaves the image unchanged.
TSCurve ts(const SampledCurve& c);

/// Same map built from first principles per sample: the unique oriented
/// isometry T with T(alpha(t)) = 0 and dT(unit tangent) = (1, 0), applied to
/// the origin. Kept as an independent cross-check of ts().
TSCurve ts_oracle(const SampledCurve& c);

/// The phi-treadmill beta = A(rho - phi + pi) alpha, with rho the tangent
/// angle. Equals e^{i phi(t)} * TS(alpha)(t) under the complex identification
/// of the plane. phi must have one entry per sample; phi identically zero
/// reproduces ts() bit for bit (the rotation reduces to the same arithmetic).
TSCurve phi_ts(const SampledCurve& c, const std::vector<double>& phi);

/// The program phi(t) = int_a^t kappa |alpha'| + rho(a) + g(t) + pi, for
/// which phi_ts(c, phi) traces e^{i g(t)} alpha(t): running the treadmill
/// under this schedule moves the curve through rotated copies of itself.
std::vector<double> treadmill_program(const SampledCurve& c, const std::vector<double>& g);

} // namespace treadmill
