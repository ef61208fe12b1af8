#pragma once

#include <stdexcept>
#include <string>

namespace tverberg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// conv(emptyset) contains nothing; membership queries need a nonempty index set.
struct EmptyIndexSet : Error {
    using Error::Error;
};

/// A vector handed in as an affine dependence is zero or not in the dependence space.
struct NotADependence : Error {
    using Error::Error;
};

/// The point set was not translated so that its unique Radon point is the origin.
struct NotNormalized : Error {
    using Error::Error;
};

/// A block's weighted point sum failed to vanish; the unique-Radon-point
/// hypothesis does not hold for the input.
struct ClaimFailed : Error {
    using Error::Error;
};

/// A theorem hypothesis required by the requested construction is violated.
struct HypothesisViolated : Error {
    using Error::Error;
};

/// Exact Tukey depth is only implemented up to dimension 3.
struct DimensionTooLarge : Error {
    using Error::Error;
};

/// A flip path leaves some index occupied at every step, so it certifies
/// nothing about deleting that index.
struct IndexNeverFree : Error {
    using Error::Error;
};

/// A configured search budget was exhausted before a verdict was reached.
struct SearchExhausted : Error {
    using Error::Error;
};

/// Structured-text input could not be parsed.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

} // namespace tverberg
