#pragma once

#include <stdexcept>
#include <string>

namespace torica {

// Error codes mirror the contract names used throughout the library.
enum class Errc {
    InvalidArgument,
    SyntaxError,
    // fan
    EmptyFan,
    OverlappingCones,
    InvalidFan,
    NotPure,
    ConeNotInFan,
    // toric
    RaysDoNotSpan,
    NonIntegral,
    NotComplete,
    NotQCartier,
    OutsideSupport,
    NotSimplicial,
    NotProjective,
    NoAmpleAvoidingW,
    LiftPostconditionViolated,
    // complexity
    DecompositionExceedsBoundary,
    TooManyComponents,
    CoefficientOutOfRange,
    // coxrat
    NonzeroConstantTerm,
    ZeroQ,
    EliminationStalled,
    NotHomogeneous,
    NotTwoTorsion,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace torica
