#pragma once

#include <stdexcept>
#include <string>

namespace atdm {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveGammaArgument : Error {
    explicit NonPositiveGammaArgument(const std::string& what) : Error(what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

struct SingularEvaluation : Error {
    explicit SingularEvaluation(const std::string& what) : Error(what) {}
};

struct InvalidExponent : Error {
    explicit InvalidExponent(const std::string& what) : Error(what) {}
};

struct NonIntegerExponent : Error {
    explicit NonIntegerExponent(const std::string& what) : Error(what) {}
};

struct InvalidSPower : Error {
    explicit InvalidSPower(const std::string& what) : Error(what) {}
};

struct MissingInitialData : Error {
    explicit MissingInitialData(const std::string& what) : Error(what) {}
};

struct InsufficientComponents : Error {
    explicit InsufficientComponents(const std::string& what) : Error(what) {}
};

struct DivergentComponent : Error {
    explicit DivergentComponent(const std::string& what) : Error(what) {}
};

struct NoCalibration : Error {
    explicit NoCalibration(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace atdm
