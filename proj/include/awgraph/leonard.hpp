#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "awgraph/qracah.hpp"
#include "awgraph/tmodule.hpp"
#include "awgraph/types.hpp"

namespace awgraph {

/// Operators of a thin module written in the module's orthonormal basis.
/// Local index i stands for E_{τ+i} and E*_{ρ+i}.
struct RestrictedOperators {
    Matrix A;
    Matrix B;
    std::vector<Matrix> E;
    std::vector<Matrix> Estar;
};

RestrictedOperators restrict_operators(const IrreducibleModule& module, const Matrix& A, const Matrix& B,
                                       std::span<const Matrix> idempotents, const DualData& dual);

/// Leonard system (𝐀, {E_i}, 𝐁, {E*_i}) acting on one thin module.
struct LeonardSystemData {
    int d = 0;
    int rho = 0;
    int tau = 0;
    std::vector<Complex> theta;
    std::vector<Complex> theta_star;
    std::vector<Complex> a_h;
    std::vector<Complex> varphi; // φ_1..φ_d
    std::vector<Complex> phi;    // ϕ_1..ϕ_d
    Complex aW, bW;
    Complex kappa;
    Complex c;
    // max |restricted eigenvalue - closed form| over both sequences
    double eigenvalue_defect = 0;
    // max off-band norm of E_i 𝐁 E_j (|i-j| > 1) and E*_i 𝐀 E*_j
    double tridiagonal_defect = 0;

    ParameterArray parameter_array() const { return {theta, theta_star, varphi, phi}; }
};

struct LeonardRestriction {
    LeonardSystemData data;
    RestrictedOperators ops;
};

/// Restricts the normalized generators to `module` and reads off the
/// eigenvalue and dual eigenvalue sequences. a(W) = a q^{2τ+d-D},
/// b(W) = b q^{2ρ+d-D}.
LeonardRestriction restrict_leonard(const IrreducibleModule& module, const NormalizedGenerators& gens,
                                    std::span<const Matrix> idempotents, const DualData& dual,
                                    const QRacahFit& fit, double tol);

/// Eigenvalue/dual eigenvalue sequences and split sequences for an
/// arbitrary pair of operators on a thin module, without the q-Racah
/// closed-form checks. Used for type classification.
ParameterArray parameter_array(const RestrictedOperators& ops);

/// a_h = trace(E*_h 𝐀) on the module, then
/// φ_i = (θ*_{i-1} - θ*_i) Σ_{h<i} (a_h - θ_h),
/// ϕ_i = (θ*_{i-1} - θ*_i) Σ_{h<i} (a_h - θ_{d-h}).
std::pair<std::vector<Complex>, std::vector<Complex>> split_sequences(LeonardSystemData& ls,
                                                                      const RestrictedOperators& ops,
                                                                      double tol);

/// Closed-form split sequences of a q-Racah Leonard system in terms of
/// a, b, c and q.
std::pair<std::vector<Complex>, std::vector<Complex>> split_sequences_closed_form(Complex a, Complex b, Complex c,
                                                                                  Complex q, int d);

/// Branch rule for the roots of ξ² - κξ + 1: |c| >= 1, then Im c >= 0.
Complex choose_c(Complex kappa);

/// κ = a b⁻¹ q^{d-1} + a⁻¹ b q^{1-d} + ϕ_1 / ((q - q⁻¹)(q^d - q^{-d})),
/// κ = 0 when d = 0.
std::pair<Complex, Complex> compute_kappa_c(const LeonardSystemData& ls, Complex q);

struct LeonardPairCertificate {
    Matrix A_in_dual_basis; // 𝐀 in an eigenbasis of 𝐁
    Matrix B_in_basis;      // 𝐁 in an eigenbasis of 𝐀
    double off_band = 0;    // largest entry outside the tridiagonal band
    double min_off_diagonal = 0; // smallest sub/superdiagonal magnitude
};

/// Checks that each restricted generator is irreducible tridiagonal in an
/// eigenbasis of the other. Throws BandViolation or ReducibleTridiagonal.
LeonardPairCertificate verify_leonard_pair(const RestrictedOperators& ops, double tol);

/// Right-hand side scalar shared by the three cyclic relations:
/// [(x + x⁻¹)(q^{d+1} + q^{-d-1}) + (y + y⁻¹)(z + z⁻¹)] / (q + q⁻¹).
Complex aw_scalar(Complex x, Complex y, Complex z, Complex q, int d);

struct AEpsilonResult {
    Matrix A_epsilon;
    double residual1 = 0; // relation with 𝐀 leading
    double residual2 = 0; // relation with 𝐁 leading
    bool used_reciprocal = false;
};

/// Solves the third ℤ₃-symmetric relation for A^ε on the module and checks
/// the other two. Retries once with c replaced by c⁻¹.
AEpsilonResult module_A_epsilon(const RestrictedOperators& ops, const LeonardSystemData& ls, Complex q,
                                double tol);

/// Residuals of the three relations on a module for a given A^ε and c.
std::array<double, 3> module_relation_residuals(const RestrictedOperators& ops, const Matrix& A_epsilon,
                                                const LeonardSystemData& ls, Complex c, Complex q);

} // namespace awgraph
