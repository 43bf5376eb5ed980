#include "lctk/errors.hpp"

namespace lctk {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DivisionByZeroTF: return "DivisionByZeroTF";
        case Errc::NegativeDelay: return "NegativeDelay";
        case Errc::DelayMismatch: return "DelayMismatch";
        case Errc::PoleEvaluation: return "PoleEvaluation";
        case Errc::UnboundParameter: return "UnboundParameter";
        case Errc::DegenerateLoop: return "DegenerateLoop";
        case Errc::ZeroDenominatorPoly: return "ZeroDenominatorPoly";
        case Errc::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
        case Errc::ImproperSystem: return "ImproperSystem";
        case Errc::ConvergenceMargin: return "ConvergenceMargin";
        case Errc::ToleranceNotMet: return "ToleranceNotMet";
        case Errc::UnsupportedComposition: return "UnsupportedComposition";
        case Errc::NonRationalResult: return "NonRationalResult";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::DuplicateName: return "DuplicateName";
        case Errc::MissingGround: return "MissingGround";
        case Errc::DisconnectedGraph: return "DisconnectedGraph";
        case Errc::SingularCircuit: return "SingularCircuit";
        case Errc::UnsupportedTopology: return "UnsupportedTopology";
        case Errc::UnsupportedComponent: return "UnsupportedComponent";
        case Errc::NonPositiveComponent: return "NonPositiveComponent";
        case Errc::UnsupportedCombination: return "UnsupportedCombination";
        case Errc::NoGainCrossover: return "NoGainCrossover";
        case Errc::NoPhaseCrossover: return "NoPhaseCrossover";
        case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace lctk
