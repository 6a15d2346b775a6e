#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcert {

enum class Errc {
    SingularMatrix,
    ZeroPolynomial,
    EndpointIsRoot,
    DegreeTooLow,
    ArityMismatch,
    UnknownVariable,
    DegreeZeroInVariable,
    NotUnivariate,
    ShiftInsufficient,
    SingularJacobian,
    HypothesisFailed,
    FaceSignUndetermined,
    OnForbiddenLine,
    DivergentIntegral,
    FactorizationMismatch,
    ZeroInR,
    DomainExcluded,
    NotHyperbolicSaddle,
    ResonantDenominator,
    NoConvergence,
    ParseError,
    CacheError,
    ReplayFailed,
    StageFailed,
};

std::string_view errc_name(Errc code) noexcept;

// Single exception type; the code is what callers and tests dispatch on.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace pcert
