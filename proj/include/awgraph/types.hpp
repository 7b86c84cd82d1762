#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace awgraph {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using IntMatrix = Eigen::MatrixXi;

/// Failure categories raised by the analysis pipeline. Each one maps onto a
/// CLI exit code through exit_code().
enum class ErrorKind {
    Io,
    Parse,
    InvalidArgument,
    Asymmetric,
    Loop,
    Disconnected,
    NotRegular,
    NotDistanceRegular,
    DiameterTooSmall,
    EigenvalueCount,
    KreinResidual,
    NoQPolynomialOrdering,
    DualEigenvalueCollision,
    NonConstantBeta,
    AllCandidatesDegenerate,
    SingularSystem,
    ZeroCoefficient,
    FitResidual,
    NonThinModule,
    EigenvalueVerification,
    AlgebraCapExceeded,
    IrreducibilityFailure,
    NonContiguousSupport,
    DiameterMismatch,
    AmbiguousGrouping,
    TridiagonalViolation,
    EigenvalueMismatch,
    ZeroSplitValue,
    BandViolation,
    ReducibleTridiagonal,
    RelationResidual,
    CentralityDefect,
};

const char* to_string(ErrorKind kind);

/// CLI exit code: 1 input, 2 not distance-regular, 3 no Q-polynomial
/// ordering, 4 not q-Racah, 5 non-thin module, 6 numerical failure.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace awgraph
