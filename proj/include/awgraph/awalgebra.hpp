#pragma once

#include <array>
#include <span>
#include <vector>

#include "awgraph/leonard.hpp"
#include "awgraph/qracah.hpp"
#include "awgraph/tmodule.hpp"
#include "awgraph/types.hpp"

namespace awgraph {

/// Per-type scalars a(ψ), b(ψ), c(ψ), d(ψ).
struct TypeScalars {
    Complex a, b, c;
    int d = 0;
};

TypeScalars type_scalars(const LeonardSystemData& ls);

/// 𝐚, 𝐛, 𝐜, Λ and inverses, each Σ_ψ (scalar) e_ψ.
struct CentralElements {
    Matrix a, a_inv;
    Matrix b, b_inv;
    Matrix c, c_inv;
    Matrix Lambda, Lambda_inv;
    // max ||[X, A]||_F, ||[X, A*]||_F over all eight matrices
    double commutation_defect = 0;
    // max ||X X⁻¹ - I||_F over the four pairs
    double inverse_defect = 0;
};

CentralElements build_central_elements(std::span<const TypeData> types, std::span<const TypeScalars> scalars,
                                       Complex q, const Matrix& A, const Matrix& Astar, double tol);

/// Raw Frobenius defect and the same divided by 1 + Σ operand norms.
struct Residual {
    double raw = 0;
    double relative = 0;
};

struct AWResiduals {
    Residual awdrg1, awdrg2, awdrg3;
    Residual central1, central2, central3;
    Residual membership;
};

struct AWTriple {
    Matrix A, B, C;
    AWResiduals residuals;
};

/// Right-hand sides of the three relations, cyclic in (𝐚, 𝐛, 𝐜).
std::array<Matrix, 3> relation_right_hand_sides(const CentralElements& ce, Complex q);

/// The three expressions X + (q Y Z - q⁻¹ Z Y)/(q² - q⁻²), cyclic in
/// (𝐀, 𝐁, 𝐂).
std::array<Matrix, 3> central_expressions(const Matrix& A, const Matrix& B, const Matrix& C, Complex q);

/// 𝐂 = RHS₃ - (q𝐀𝐁 - q⁻¹𝐁𝐀)/(q² - q⁻²); fills the awdrg residuals and
/// throws RelationResidual when a relative residual exceeds tol.
AWTriple build_C(const NormalizedGenerators& gens, const CentralElements& ce, Complex q, double tol);

/// max(||[X, 𝐀]||_F, ||[X, 𝐁]||_F) for each central expression X; fills
/// the central residuals of `triple`.
std::array<Residual, 3> verify_centrality(AWTriple& triple, Complex q);

/// ||𝐂 - P_T(𝐂)||_F.
Residual verify_T_membership(AWTriple& triple, const AlgebraBasis& basis);

} // namespace awgraph
