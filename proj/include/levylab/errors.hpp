#pragma once

#include <stdexcept>
#include <string>

namespace levylab {

// Contract violations carry the condition name they stand for, so callers and
// tests can match on the concrete type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRadius : Error { using Error::Error; };
struct InvalidCutoff : Error { using Error::Error; };
struct ExponentOutOfRange : Error { using Error::Error; };
struct TimeOutOfRange : Error { using Error::Error; };
struct DuplicateTimestamp : Error { using Error::Error; };
struct JumpOutOfSupport : Error { using Error::Error; };
struct LevelOutOfRange : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct VariableSigma : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct MeasureCertificationFailure : Error { using Error::Error; };
struct LambdaExplosion : Error { using Error::Error; };
struct ConfigInvalid : Error { using Error::Error; };

struct NoConvergence : Error {
    int iterations;
    double last_contraction_ratio;
    NoConvergence(const std::string& what, int iters, double ratio)
        : Error(what), iterations(iters), last_contraction_ratio(ratio) {}
};

struct PicardDivergence : Error {
    int iteration;
    PicardDivergence(const std::string& what, int iter) : Error(what), iteration(iter) {}
};

}  // namespace levylab
