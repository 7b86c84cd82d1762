#include "awgraph/leonard.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace awgraph {

namespace {

Complex restricted_eigenvalue(const Matrix& op, const Matrix& projector)
{
    // For a rank-one projector trace(E) = 1; dividing keeps this exact
    // when the restriction carries rounding noise.
    return (projector * op).trace() / projector.trace();
}

// Unit vector spanning the range of a rank-one Hermitian projector.
Vector range_vector(const Matrix& projector)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(projector);
    return solver.eigenvectors().col(projector.cols() - 1);
}

struct BandReport {
    Matrix form;
    double off_band = 0;
    double min_off_diagonal = std::numeric_limits<double>::infinity();
};

BandReport band_form(const Matrix& op, const std::vector<Matrix>& projectors)
{
    const auto k = static_cast<Eigen::Index>(projectors.size());
    Matrix S(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        S.col(i) = range_vector(projectors[static_cast<std::size_t>(i)]);
    BandReport r;
    r.form = S.adjoint() * op * S;
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            const double mag = std::abs(r.form(i, j));
            const auto gap = std::abs(i - j);
            if (gap > 1)
                r.off_band = std::max(r.off_band, mag);
            else if (gap == 1)
                r.min_off_diagonal = std::min(r.min_off_diagonal, mag);
        }
    return r;
}

} // namespace

RestrictedOperators restrict_operators(const IrreducibleModule& module, const Matrix& A, const Matrix& B,
                                       std::span<const Matrix> idempotents, const DualData& dual)
{
    const Matrix& U = module.basis;
    RestrictedOperators ops;
    ops.A = U.adjoint() * A * U;
    ops.B = U.adjoint() * B * U;
    for (int i = 0; i <= module.d; ++i) {
        ops.E.push_back(U.adjoint() * idempotents[module.tau + i] * U);
        ops.Estar.push_back(U.adjoint() * dual.dual_idempotents[module.rho + i] * U);
    }
    return ops;
}

ParameterArray parameter_array(const RestrictedOperators& ops)
{
    LeonardSystemData ls;
    ls.d = static_cast<int>(ops.E.size()) - 1;
    for (int i = 0; i <= ls.d; ++i) {
        ls.theta.push_back(restricted_eigenvalue(ops.A, ops.E[i]));
        ls.theta_star.push_back(restricted_eigenvalue(ops.B, ops.Estar[i]));
    }
    // Zero-value checks are skipped here; classification only compares.
    split_sequences(ls, ops, 0.0);
    return ls.parameter_array();
}

LeonardRestriction restrict_leonard(const IrreducibleModule& module, const NormalizedGenerators& gens,
                                    std::span<const Matrix> idempotents, const DualData& dual,
                                    const QRacahFit& fit, double tol)
{
    if (!module.thin)
        throw Error(ErrorKind::NonThinModule, "Leonard restriction needs a thin module");

    LeonardRestriction out;
    out.ops = restrict_operators(module, gens.A, gens.B, idempotents, dual);
    auto& ls = out.data;
    const auto& ops = out.ops;
    const int d = module.d;
    const int D = fit.diameter;
    ls.d = d;
    ls.rho = module.rho;
    ls.tau = module.tau;
    ls.aW = fit.a * std::pow(fit.q, 2 * module.tau + d - D);
    ls.bW = fit.b * std::pow(fit.q, 2 * module.rho + d - D);

    for (int i = 0; i <= d; ++i) {
        ls.theta.push_back(restricted_eigenvalue(ops.A, ops.E[i]));
        ls.theta_star.push_back(restricted_eigenvalue(ops.B, ops.Estar[i]));
    }

    for (int i = 0; i <= d; ++i) {
        const Complex expected = qracah_eigenvalue(ls.aW, fit.q, i, d);
        const Complex expected_star = qracah_eigenvalue(ls.bW, fit.q, i, d);
        const double defect = std::max({std::abs(ls.theta[i] - expected), std::abs(ls.theta_star[i] - expected_star),
                                        (ops.A * ops.E[i] - expected * ops.E[i]).norm(),
                                        (ops.B * ops.Estar[i] - expected_star * ops.Estar[i]).norm()});
        ls.eigenvalue_defect = std::max(ls.eigenvalue_defect, defect);
        const double scale = 1 + std::abs(expected) + std::abs(expected_star);
        if (defect > tol * scale) {
            std::ostringstream msg;
            msg << "module eigenvalue " << i << " deviates from the q-Racah closed form by " << defect;
            throw Error(ErrorKind::EigenvalueMismatch, msg.str());
        }
    }

    // E_i 𝐁 E_j and E*_i 𝐀 E*_j vanish for |i-j| > 1 and not for |i-j| = 1.
    const double scale = 1 + ops.A.norm() + ops.B.norm();
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            const int gap = std::abs(i - j);
            if (gap == 0)
                continue;
            const double eb = (ops.E[i] * ops.B * ops.E[j]).norm();
            const double ea = (ops.Estar[i] * ops.A * ops.Estar[j]).norm();
            if (gap > 1) {
                ls.tridiagonal_defect = std::max({ls.tridiagonal_defect, eb, ea});
                if (std::max(eb, ea) > tol * scale)
                    throw Error(ErrorKind::TridiagonalViolation,
                                "E_i B E_j is nonzero for |i-j| > 1 on a module");
            } else if (std::min(eb, ea) <= tol * scale) {
                throw Error(ErrorKind::TridiagonalViolation, "E_i B E_j vanishes for |i-j| = 1 on a module");
            }
        }
    return out;
}

std::pair<std::vector<Complex>, std::vector<Complex>> split_sequences(LeonardSystemData& ls,
                                                                      const RestrictedOperators& ops,
                                                                      double tol)
{
    const int d = ls.d;
    ls.a_h.clear();
    for (int h = 0; h <= d; ++h)
        ls.a_h.push_back((ops.Estar[h] * ops.A).trace());

    ls.varphi.clear();
    ls.phi.clear();
    Complex sum_first = 0.0, sum_second = 0.0;
    for (int i = 1; i <= d; ++i) {
        sum_first += ls.a_h[i - 1] - ls.theta[i - 1];
        sum_second += ls.a_h[i - 1] - ls.theta[d - (i - 1)];
        const Complex step = ls.theta_star[i - 1] - ls.theta_star[i];
        ls.varphi.push_back(step * sum_first);
        ls.phi.push_back(step * sum_second);
    }

    if (tol > 0) {
        double scale = 1;
        for (auto t : ls.theta)
            scale = std::max(scale, std::abs(t));
        for (auto t : ls.theta_star)
            scale = std::max(scale, std::abs(t));
        for (int i = 0; i < d; ++i)
            if (std::abs(ls.varphi[i]) <= tol * scale * scale || std::abs(ls.phi[i]) <= tol * scale * scale)
                throw Error(ErrorKind::ZeroSplitValue, "split sequence value " + std::to_string(i + 1) + " vanishes");
    }
    return {ls.varphi, ls.phi};
}

std::pair<std::vector<Complex>, std::vector<Complex>> split_sequences_closed_form(Complex a, Complex b, Complex c,
                                                                                  Complex q, int d)
{
    std::vector<Complex> varphi, phi;
    auto p = [q](int e) { return std::pow(q, e); };
    for (int i = 1; i <= d; ++i) {
        const Complex common = p(d + 1) * (p(i) - p(-i)) * (p(i - d - 1) - p(d - i + 1));
        varphi.push_back(common / (a * b) * (p(-i) - a * b * c * p(i - d - 1))
                         * (p(-i) - a * b / c * p(i - d - 1)));
        phi.push_back(common * a / b * (p(-i) - b / a * c * p(i - d - 1)) * (p(-i) - b / a / c * p(i - d - 1)));
    }
    return {varphi, phi};
}

Complex choose_c(Complex kappa)
{
    const Complex root = std::sqrt(kappa * kappa - 4.0);
    const Complex r1 = (kappa + root) / 2.0;
    const Complex r2 = (kappa - root) / 2.0;
    if (std::abs(std::abs(r1) - std::abs(r2)) > 1e-9)
        return std::abs(r1) > std::abs(r2) ? r1 : r2;
    return r1.imag() >= r2.imag() ? r1 : r2;
}

std::pair<Complex, Complex> compute_kappa_c(const LeonardSystemData& ls, Complex q)
{
    Complex kappa = 0.0;
    const int d = ls.d;
    if (d >= 1) {
        if (ls.phi.empty())
            throw Error(ErrorKind::InvalidArgument, "split sequences must be computed before κ");
        kappa = ls.aW / ls.bW * std::pow(q, d - 1) + ls.bW / ls.aW * std::pow(q, 1 - d)
                + ls.phi[0] / ((q - 1.0 / q) * (std::pow(q, d) - std::pow(q, -d)));
    }
    return {kappa, choose_c(kappa)};
}

LeonardPairCertificate verify_leonard_pair(const RestrictedOperators& ops, double tol)
{
    LeonardPairCertificate cert;
    const BandReport in_dual = band_form(ops.A, ops.Estar);
    const BandReport in_primal = band_form(ops.B, ops.E);
    cert.A_in_dual_basis = in_dual.form;
    cert.B_in_basis = in_primal.form;
    cert.off_band = std::max(in_dual.off_band, in_primal.off_band);
    cert.min_off_diagonal = ops.E.size() > 1 ? std::min(in_dual.min_off_diagonal, in_primal.min_off_diagonal) : 0.0;

    const double scale = 1 + ops.A.norm() + ops.B.norm();
    if (cert.off_band > tol * scale) {
        std::ostringstream msg;
        msg << "restricted generator is not tridiagonal: off-band entry " << cert.off_band;
        throw Error(ErrorKind::BandViolation, msg.str());
    }
    if (ops.E.size() > 1 && cert.min_off_diagonal <= tol * scale)
        throw Error(ErrorKind::ReducibleTridiagonal, "tridiagonal form has a vanishing sub/superdiagonal entry");
    return cert;
}

Complex aw_scalar(Complex x, Complex y, Complex z, Complex q, int d)
{
    return ((x + 1.0 / x) * (std::pow(q, d + 1) + std::pow(q, -d - 1)) + (y + 1.0 / y) * (z + 1.0 / z))
           / (q + 1.0 / q);
}

std::array<double, 3> module_relation_residuals(const RestrictedOperators& ops, const Matrix& A_epsilon,
                                                const LeonardSystemData& ls, Complex c, Complex q)
{
    const auto k = ops.A.rows();
    const Matrix I = Matrix::Identity(k, k);
    const Complex denom = q * q - 1.0 / (q * q);
    const Matrix& A = ops.A;
    const Matrix& B = ops.B;
    const Matrix& X = A_epsilon;
    const int d = ls.d;
    const Matrix r1 = A + (q * B * X - X * B / q) / denom - aw_scalar(ls.aW, ls.bW, c, q, d) * I;
    const Matrix r2 = B + (q * X * A - A * X / q) / denom - aw_scalar(ls.bW, c, ls.aW, q, d) * I;
    const Matrix r3 = X + (q * A * B - B * A / q) / denom - aw_scalar(c, ls.aW, ls.bW, q, d) * I;
    return {r1.norm(), r2.norm(), r3.norm()};
}

AEpsilonResult module_A_epsilon(const RestrictedOperators& ops, const LeonardSystemData& ls, Complex q, double tol)
{
    const auto k = ops.A.rows();
    const Matrix I = Matrix::Identity(k, k);
    const Complex denom = q * q - 1.0 / (q * q);
    const Matrix twisted = (q * ops.A * ops.B - ops.B * ops.A / q) / denom;

    AEpsilonResult result;
    for (Complex c : {ls.c, 1.0 / ls.c}) {
        result.A_epsilon = aw_scalar(c, ls.aW, ls.bW, q, ls.d) * I - twisted;
        const auto res = module_relation_residuals(ops, result.A_epsilon, ls, c, q);
        result.residual1 = res[0];
        result.residual2 = res[1];
        const double scale = 1 + ops.A.norm() + ops.B.norm() + result.A_epsilon.norm();
        if (std::max(res[0], res[1]) <= tol * scale)
            return result;
        result.used_reciprocal = true;
    }
    std::ostringstream msg;
    msg << "Askey-Wilson relations fail on a module of diameter " << ls.d << ": residuals " << result.residual1
        << ", " << result.residual2;
    throw Error(ErrorKind::RelationResidual, msg.str());
}

} // namespace awgraph
