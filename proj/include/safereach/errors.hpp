#pragma once

#include <stdexcept>
#include <string>

namespace safereach {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A pursuer is not strictly faster than the evader, so the bounded
/// reachable disc does not exist.
class SpeedOrderViolation : public Error {
public:
    using Error::Error;
};

/// A pursuer effectively coincides with the evader; the geometry is
/// degenerate (radius-zero disc) and the engagement is already decided.
class CaptureDegenerate : public Error {
public:
    using Error::Error;
};

/// A pairwise circle constraint turned out empty.  Two discs that share an
/// interior point always overlap, so this indicates corrupted input rather
/// than a reachable geometric state.
class EmptyOverlap : public Error {
public:
    using Error::Error;
};

/// An internal consistency check of the boundary construction failed
/// (multi-component arc range, negative area, broken closure).
class GeometryAssertionFailure : public Error {
public:
    using Error::Error;
};

/// A finite-difference probe configuration could not be evaluated.
class DegenerateProbe : public Error {
public:
    using Error::Error;
};

/// Scenario parameters violate their contract; the message names the field.
class InvalidScenario : public Error {
public:
    using Error::Error;
};

/// Also used by scenario loading for semantic checks.
using ValidationError = InvalidScenario;

/// A scenario or trajectory file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An integration step failed; the message carries a state snapshot.
class StepFailure : public Error {
public:
    using Error::Error;
};

} // namespace safereach
