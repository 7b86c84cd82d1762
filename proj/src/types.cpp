#include "awgraph/types.hpp"

namespace awgraph {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Io: return "Io";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Asymmetric: return "Asymmetric";
    case ErrorKind::Loop: return "Loop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotDistanceRegular: return "NotDistanceRegular";
    case ErrorKind::DiameterTooSmall: return "DiameterTooSmall";
    case ErrorKind::EigenvalueCount: return "EigenvalueCount";
    case ErrorKind::KreinResidual: return "KreinResidual";
    case ErrorKind::NoQPolynomialOrdering: return "NoQPolynomialOrdering";
    case ErrorKind::DualEigenvalueCollision: return "DualEigenvalueCollision";
    case ErrorKind::NonConstantBeta: return "NonConstantBeta";
    case ErrorKind::AllCandidatesDegenerate: return "AllCandidatesDegenerate";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::FitResidual: return "FitResidual";
    case ErrorKind::NonThinModule: return "NonThinModule";
    case ErrorKind::EigenvalueVerification: return "EigenvalueVerification";
    case ErrorKind::AlgebraCapExceeded: return "AlgebraCapExceeded";
    case ErrorKind::IrreducibilityFailure: return "IrreducibilityFailure";
    case ErrorKind::NonContiguousSupport: return "NonContiguousSupport";
    case ErrorKind::DiameterMismatch: return "DiameterMismatch";
    case ErrorKind::AmbiguousGrouping: return "AmbiguousGrouping";
    case ErrorKind::TridiagonalViolation: return "TridiagonalViolation";
    case ErrorKind::EigenvalueMismatch: return "EigenvalueMismatch";
    case ErrorKind::ZeroSplitValue: return "ZeroSplitValue";
    case ErrorKind::BandViolation: return "BandViolation";
    case ErrorKind::ReducibleTridiagonal: return "ReducibleTridiagonal";
    case ErrorKind::RelationResidual: return "RelationResidual";
    case ErrorKind::CentralityDefect: return "CentralityDefect";
    }
    return "Unknown";
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::Asymmetric:
    case ErrorKind::Loop:
    case ErrorKind::Disconnected:
        return 1;
    case ErrorKind::NotRegular:
    case ErrorKind::NotDistanceRegular:
    case ErrorKind::DiameterTooSmall:
        return 2;
    case ErrorKind::NoQPolynomialOrdering:
    case ErrorKind::DualEigenvalueCollision:
        return 3;
    case ErrorKind::NonConstantBeta:
    case ErrorKind::AllCandidatesDegenerate:
    case ErrorKind::SingularSystem:
    case ErrorKind::ZeroCoefficient:
    case ErrorKind::FitResidual:
        return 4;
    case ErrorKind::NonThinModule:
        return 5;
    default:
        return 6;
    }
}

} // namespace awgraph
