// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace treadmill {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad arguments or malformed inputs (mismatched array lengths, non-increasing
/// parameters, out-of-domain spec fields, unreadable files).
struct ValidationError : Error {
    using Error::Error;
};

/// A curve sample has tangent norm below the regularity threshold.
struct RegularityViolation : Error {
    using Error::Error;
};

/// Consecutive tangent directions turn by almost pi between samples; the
/// continuous angle lift is ambiguous at this sampling density.
struct UnwrapFailure : Error {
    using Error::Error;
};

/// The input trace crosses the vertical axis with nonvanishing horizontal
/// velocity, so no plane curve has it as a treadmill image.
struct NotATreadmillSled : Error {
    using Error::Error;
};

/// The range condition w*f - z' > 0 fails somewhere on the trace.
struct RangeViolation : Error {
    using Error::Error;
};

/// The trace is a single point; the companion function is not determined and
/// must be supplied by the caller.
struct ConstantCurve : Error {
    using Error::Error;
};

/// First fundamental form is singular (EG - F^2 <= 0) at an interior node.
struct DegenerateMetric : Error {
    using Error::Error;
};

/// A requested level set contains no curve (parameter out of range).
struct EmptyLevelSet : Error {
    using Error::Error;
};

} // namespace treadmill
