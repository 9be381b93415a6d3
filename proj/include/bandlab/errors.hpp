#pragma once

#include <stdexcept>
#include <string>

namespace bandlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A raw model parameter was zero, negative, or non-finite.
struct NonPositiveParameter : Error {
    explicit NonPositiveParameter(const std::string& field)
        : Error("parameter '" + field + "' must be strictly positive and finite"),
          field(field) {}
    std::string field;
};

/// A model-specific constraint (e.g. d > 1) was violated.
struct ConstraintViolation : Error {
    using Error::Error;
};

/// Crowd-effect machinery requested with alpha = 0 (gamma0 = 1/tau).
struct DegenerateCrowd : Error {
    using Error::Error;
};

/// Requested operation has no closed form for this model kind.
struct UnsupportedKind : Error {
    using Error::Error;
};

struct GridTooCoarse : Error {
    using Error::Error;
};

struct GridMismatch : Error {
    using Error::Error;
};

/// A field became non-finite during time stepping.
struct StabilityViolation : Error {
    using Error::Error;
};

/// u dropped below the negativity tolerance during time stepping.
struct NegativityBreach : Error {
    using Error::Error;
};

/// v never crosses the requested level in a snapshot.
struct NoCrossing : Error {
    using Error::Error;
};

/// Jump kernel cannot be resolved on the grid (sigma < 3 dx).
struct ResolutionError : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

}  // namespace bandlab
