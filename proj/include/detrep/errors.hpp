#pragma once

#include <stdexcept>
#include <string>

namespace detrep {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (CLI exit code 2).
struct ParseError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BadDimensions : Error { using Error::Error; };

/// A stated operation precondition does not hold for the given input
/// (CLI treats this like malformed input, exit code 2).
struct PreconditionError : Error { using Error::Error; };

struct SingularMatrix : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct ZeroColumn : Error { using Error::Error; };
struct ZeroMatrix : Error { using Error::Error; };
struct NotInSpan : Error { using Error::Error; };
struct RankNotOne : Error { using Error::Error; };
struct TrivialKernel : Error { using Error::Error; };
struct RankTooLow : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };
struct RankUnexpected : Error { using Error::Error; };
struct LiftFailed : Error { using Error::Error; };

/// Violated internal invariant; never expected on valid executions
/// (CLI exit code 3).
struct InternalError : Error { using Error::Error; };

inline void internal_check(bool cond, const char* msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace detrep
