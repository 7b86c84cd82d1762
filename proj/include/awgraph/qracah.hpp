#pragma once

#include <span>
#include <vector>

#include "awgraph/types.hpp"

namespace awgraph {

/// Candidates with |q^4 - 1| at or below this are rejected.
inline constexpr double kQDegeneracyTolerance = 1e-6;

/// Base q candidates for θ_i = w + u q^{2i-D} + v q^{D-2i}.
///
/// Uses the ratio β = (θ_{i-1} - θ_{i+2}) / (θ_i - θ_{i+1}) = q² + q⁻² + 1,
/// which must be constant for 1 <= i <= D-2. The returned list is in
/// canonical preference order: only |q| >= 1 is kept, candidates with
/// arg q in [0, π/2] come first, then increasing arg in [0, 2π).
std::vector<Complex> fit_base_q(std::span<const double> thetas, double tol);

/// Orders candidates by the canonical branch rule and drops |q| < 1.
std::vector<Complex> canonicalize_q(std::vector<Complex> candidates);

struct AffineFit {
    Complex w, u, v;
    double residual = 0; // max_i |θ_i - w - u q^{2i-D} - v q^{D-2i}|
};

/// Least-squares solve of the (D+1) x 3 system for (w, u, v). Throws
/// ZeroCoefficient when u or v vanishes.
AffineFit solve_affine(std::span<const Complex> thetas, Complex q, int D);
AffineFit solve_affine(std::span<const double> thetas, Complex q, int D);

struct QRacahFit {
    Complex q;
    Complex w, u, v;
    Complex wstar, ustar, vstar;
    Complex a, b; // a² = u/v, b² = u*/v*
    double residual = 0;

    int diameter = 0;
};

/// Square root with nonnegative real part; when the real part vanishes the
/// root with nonnegative imaginary part.
Complex principal_sqrt(Complex z);

/// Fits both sequences with the shared q and checks the fit residual against
/// 1e-8 (1 + max |θ|).
QRacahFit fit_qracah(std::span<const double> thetas, std::span<const double> dual_thetas, Complex q);

/// Fitted value w + u q^{2i-D} + v q^{D-2i} (starred coefficients when
/// `dual`).
Complex affine_value(const QRacahFit& fit, int i, bool dual);

/// a q^{2i-D} + a⁻¹ q^{D-2i}
Complex qracah_eigenvalue(Complex scale, Complex q, int i, int d);

struct NormalizedGenerators {
    Matrix A; // (A - wI) / (a v)
    Matrix B; // (A* - w*I) / (b v*)
};

/// Builds 𝐀, 𝐁 and verifies their eigenvalues on every E_iV and E*_iV.
/// `idempotents` must follow the Q-polynomial ordering.
NormalizedGenerators normalize_generators(const Matrix& A, const Matrix& Astar, const QRacahFit& fit,
                                          std::span<const Matrix> idempotents,
                                          std::span<const Matrix> dual_idempotents, double tol);

} // namespace awgraph
