#include "torica/errors.hpp"

namespace torica {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::EmptyFan: return "EmptyFan";
        case Errc::OverlappingCones: return "OverlappingCones";
        case Errc::InvalidFan: return "InvalidFan";
        case Errc::NotPure: return "NotPure";
        case Errc::ConeNotInFan: return "ConeNotInFan";
        case Errc::RaysDoNotSpan: return "RaysDoNotSpan";
        case Errc::NonIntegral: return "NonIntegral";
        case Errc::NotComplete: return "NotComplete";
        case Errc::NotQCartier: return "NotQCartier";
        case Errc::OutsideSupport: return "OutsideSupport";
        case Errc::NotSimplicial: return "NotSimplicial";
        case Errc::NotProjective: return "NotProjective";
        case Errc::NoAmpleAvoidingW: return "NoAmpleAvoidingW";
        case Errc::LiftPostconditionViolated: return "LiftPostconditionViolated";
        case Errc::DecompositionExceedsBoundary: return "DecompositionExceedsBoundary";
        case Errc::TooManyComponents: return "TooManyComponents";
        case Errc::CoefficientOutOfRange: return "CoefficientOutOfRange";
        case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
        case Errc::ZeroQ: return "ZeroQ";
        case Errc::EliminationStalled: return "EliminationStalled";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::NotTwoTorsion: return "NotTwoTorsion";
    }
    return "UnknownError";
}

}  // namespace torica
