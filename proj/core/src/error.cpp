#include "pcert/error.hpp"

namespace pcert {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::EndpointIsRoot: return "EndpointIsRoot";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::DegreeZeroInVariable: return "DegreeZeroInVariable";
    case Errc::NotUnivariate: return "NotUnivariate";
    case Errc::ShiftInsufficient: return "ShiftInsufficient";
    case Errc::SingularJacobian: return "SingularJacobian";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::FaceSignUndetermined: return "FaceSignUndetermined";
    case Errc::OnForbiddenLine: return "OnForbiddenLine";
    case Errc::DivergentIntegral: return "DivergentIntegral";
    case Errc::FactorizationMismatch: return "FactorizationMismatch";
    case Errc::ZeroInR: return "ZeroInR";
    case Errc::DomainExcluded: return "DomainExcluded";
    case Errc::NotHyperbolicSaddle: return "NotHyperbolicSaddle";
    case Errc::ResonantDenominator: return "ResonantDenominator";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::ParseError: return "ParseError";
    case Errc::CacheError: return "CacheError";
    case Errc::ReplayFailed: return "ReplayFailed";
    case Errc::StageFailed: return "StageFailed";
    }
    return "Unknown";
}

} // namespace pcert
