#pragma once

#include <stdexcept>
#include <string>

namespace lctk {

/// Domain error codes. Every throwing operation in the library reports one
/// of these; the CLI maps them to exit code 1 and prints the name.
enum class Errc {
    DivisionByZero,
    DivisionByZeroTF,
    NegativeDelay,
    DelayMismatch,
    PoleEvaluation,
    UnboundParameter,
    DegenerateLoop,
    ZeroDenominatorPoly,
    SingularLeadingCoefficient,
    ImproperSystem,
    ConvergenceMargin,
    ToleranceNotMet,
    UnsupportedComposition,
    NonRationalResult,
    SyntaxError,
    DuplicateName,
    MissingGround,
    DisconnectedGraph,
    SingularCircuit,
    UnsupportedTopology,
    UnsupportedComponent,
    NonPositiveComponent,
    UnsupportedCombination,
    NoGainCrossover,
    NoPhaseCrossover,
    ZeroLeadingCoefficient,
    InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }
    [[nodiscard]] const char* name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

/// One distinct exception type per error code so tests can catch precisely.
template <Errc Code>
class TypedError : public Error {
public:
    explicit TypedError(const std::string& message) : Error(Code, message) {}
};

using DivisionByZero = TypedError<Errc::DivisionByZero>;
using DivisionByZeroTF = TypedError<Errc::DivisionByZeroTF>;
using NegativeDelay = TypedError<Errc::NegativeDelay>;
using DelayMismatch = TypedError<Errc::DelayMismatch>;
using PoleEvaluation = TypedError<Errc::PoleEvaluation>;
using UnboundParameter = TypedError<Errc::UnboundParameter>;
using DegenerateLoop = TypedError<Errc::DegenerateLoop>;
using ZeroDenominatorPoly = TypedError<Errc::ZeroDenominatorPoly>;
using SingularLeadingCoefficient = TypedError<Errc::SingularLeadingCoefficient>;
using ImproperSystem = TypedError<Errc::ImproperSystem>;
using ConvergenceMargin = TypedError<Errc::ConvergenceMargin>;
using ToleranceNotMet = TypedError<Errc::ToleranceNotMet>;
using UnsupportedComposition = TypedError<Errc::UnsupportedComposition>;
using NonRationalResult = TypedError<Errc::NonRationalResult>;
using SyntaxError = TypedError<Errc::SyntaxError>;
using DuplicateName = TypedError<Errc::DuplicateName>;
using MissingGround = TypedError<Errc::MissingGround>;
using DisconnectedGraph = TypedError<Errc::DisconnectedGraph>;
using SingularCircuit = TypedError<Errc::SingularCircuit>;
using UnsupportedTopology = TypedError<Errc::UnsupportedTopology>;
using UnsupportedComponent = TypedError<Errc::UnsupportedComponent>;
using NonPositiveComponent = TypedError<Errc::NonPositiveComponent>;
using UnsupportedCombination = TypedError<Errc::UnsupportedCombination>;
using NoGainCrossover = TypedError<Errc::NoGainCrossover>;
using NoPhaseCrossover = TypedError<Errc::NoPhaseCrossover>;
using ZeroLeadingCoefficient = TypedError<Errc::ZeroLeadingCoefficient>;
using InvalidArgument = TypedError<Errc::InvalidArgument>;

}  // namespace lctk
