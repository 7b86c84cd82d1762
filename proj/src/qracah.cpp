#include "awgraph/qracah.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace awgraph {

namespace {

double max_abs(std::span<const Complex> values)
{
    double m = 0;
    for (auto v : values)
        m = std::max(m, std::abs(v));
    return m;
}

// arg(q) mapped to [0, 2π), with tiny negative angles snapped to 0.
double canonical_arg(Complex q)
{
    double a = std::arg(q);
    if (std::abs(a) <= 1e-12)
        return 0.0;
    if (a < 0)
        a += 2 * std::numbers::pi;
    return a;
}

} // namespace

std::vector<Complex> canonicalize_q(std::vector<Complex> candidates)
{
    std::erase_if(candidates, [](Complex q) { return std::abs(q) < 1.0 - 1e-12; });
    auto key = [](Complex q) {
        const double a = canonical_arg(q);
        const bool preferred = a <= std::numbers::pi / 2 + 1e-12;
        return std::make_pair(preferred ? 0 : 1, a);
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Complex l, Complex r) { return key(l) < key(r); });
    return candidates;
}

std::vector<Complex> fit_base_q(std::span<const double> thetas, double tol)
{
    const int D = static_cast<int>(thetas.size()) - 1;
    if (D < 3)
        throw Error(ErrorKind::InvalidArgument, "q fitting needs D >= 3");
    for (int i = 0; i < D; ++i)
        if (thetas[i] == thetas[i + 1])
            throw Error(ErrorKind::InvalidArgument, "eigenvalue sequence is not mutually distinct");

    std::vector<double> beta;
    for (int i = 1; i <= D - 2; ++i)
        beta.push_back((thetas[i - 1] - thetas[i + 2]) / (thetas[i] - thetas[i + 1]));
    for (double b : beta)
        if (std::abs(b - beta.front()) > tol * (1 + std::abs(beta.front()))) {
            std::ostringstream msg;
            msg << "β ratios are not constant (" << beta.front() << " vs " << b << ")";
            throw Error(ErrorKind::NonConstantBeta, msg.str());
        }
    double mean = 0;
    for (double b : beta)
        mean += b;
    mean /= static_cast<double>(beta.size());

    // s = q² solves s² - (β - 1)s + 1 = 0. A vanishing discriminant means
    // s = ±1 (β = 3 or β = -1), which is the degenerate q⁴ = 1 case; snap it
    // so that rounding noise cannot fake a valid q near 1.
    const double p = mean - 1;
    Complex disc = p * p - 4.0;
    if (std::abs(disc) <= 1e-8 * (1 + p * p))
        disc = 0.0;
    const Complex root = std::sqrt(disc);
    std::vector<Complex> squares{(p + root) / 2.0, (p - root) / 2.0};
    if (root == 0.0)
        squares.pop_back();

    std::vector<Complex> candidates;
    for (Complex s : squares) {
        const Complex r = std::sqrt(s);
        for (Complex q : {r, -r})
            if (std::abs(std::pow(q, 4) - 1.0) > kQDegeneracyTolerance)
                candidates.push_back(q);
    }
    if (candidates.empty()) {
        std::ostringstream msg;
        msg << "every q candidate satisfies q^4 = 1 (β = " << mean << ")";
        throw Error(ErrorKind::AllCandidatesDegenerate, msg.str());
    }
    return canonicalize_q(std::move(candidates));
}

AffineFit solve_affine(std::span<const Complex> thetas, Complex q, int D)
{
    if (static_cast<int>(thetas.size()) != D + 1)
        throw Error(ErrorKind::InvalidArgument, "sequence length must be D+1");
    Eigen::MatrixXcd M(D + 1, 3);
    Eigen::VectorXcd rhs(D + 1);
    for (int i = 0; i <= D; ++i) {
        M(i, 0) = 1.0;
        M(i, 1) = std::pow(q, 2 * i - D);
        M(i, 2) = std::pow(q, D - 2 * i);
        rhs(i) = thetas[i];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(M);
    if (qr.rank() < 3)
        throw Error(ErrorKind::SingularSystem, "affine q-Racah system is singular");
    const Eigen::VectorXcd sol = qr.solve(rhs);

    AffineFit fit{sol(0), sol(1), sol(2), 0.0};
    fit.residual = (M * sol - rhs).cwiseAbs().maxCoeff();

    const double scale = 1 + max_abs(thetas);
    if (std::abs(fit.u) <= 1e-9 * scale || std::abs(fit.v) <= 1e-9 * scale)
        throw Error(ErrorKind::ZeroCoefficient, "q-Racah coefficient u or v vanishes");
    return fit;
}

AffineFit solve_affine(std::span<const double> thetas, Complex q, int D)
{
    std::vector<Complex> values(thetas.begin(), thetas.end());
    return solve_affine(std::span<const Complex>(values), q, D);
}

Complex principal_sqrt(Complex z)
{
    Complex r = std::sqrt(z);
    if (std::abs(r.real()) <= 1e-12 * std::abs(r)) {
        if (r.imag() < 0)
            r = -r;
    } else if (r.real() < 0) {
        r = -r;
    }
    return r;
}

QRacahFit fit_qracah(std::span<const double> thetas, std::span<const double> dual_thetas, Complex q)
{
    const int D = static_cast<int>(thetas.size()) - 1;
    if (static_cast<int>(dual_thetas.size()) != D + 1)
        throw Error(ErrorKind::InvalidArgument, "dual sequence length differs");
    if (std::abs(std::pow(q, 4) - 1.0) <= kQDegeneracyTolerance)
        throw Error(ErrorKind::AllCandidatesDegenerate, "q^4 = 1");

    const AffineFit primal = solve_affine(thetas, q, D);
    const AffineFit dual = solve_affine(dual_thetas, q, D);

    auto check = [](const AffineFit& f, std::span<const double> seq, const char* which) {
        double scale = 0;
        for (double t : seq)
            scale = std::max(scale, std::abs(t));
        if (f.residual > 1e-8 * (1 + scale)) {
            std::ostringstream msg;
            msg << which << " sequence is not of q-Racah form: residual " << f.residual;
            throw Error(ErrorKind::FitResidual, msg.str());
        }
    };
    check(primal, thetas, "eigenvalue");
    check(dual, dual_thetas, "dual eigenvalue");

    QRacahFit fit;
    fit.q = q;
    fit.w = primal.w;
    fit.u = primal.u;
    fit.v = primal.v;
    fit.wstar = dual.w;
    fit.ustar = dual.u;
    fit.vstar = dual.v;
    fit.a = principal_sqrt(fit.u / fit.v);
    fit.b = principal_sqrt(fit.ustar / fit.vstar);
    fit.residual = std::max(primal.residual, dual.residual);
    fit.diameter = D;
    return fit;
}

Complex affine_value(const QRacahFit& fit, int i, bool dual)
{
    const int D = fit.diameter;
    const Complex up = std::pow(fit.q, 2 * i - D);
    const Complex down = std::pow(fit.q, D - 2 * i);
    return dual ? fit.wstar + fit.ustar * up + fit.vstar * down : fit.w + fit.u * up + fit.v * down;
}

Complex qracah_eigenvalue(Complex scale, Complex q, int i, int d)
{
    return scale * std::pow(q, 2 * i - d) + std::pow(q, d - 2 * i) / scale;
}

NormalizedGenerators normalize_generators(const Matrix& A, const Matrix& Astar, const QRacahFit& fit,
                                          std::span<const Matrix> idempotents,
                                          std::span<const Matrix> dual_idempotents, double tol)
{
    const auto n = A.rows();
    const Matrix I = Matrix::Identity(n, n);
    NormalizedGenerators gens{(A - fit.w * I) / (fit.a * fit.v), (Astar - fit.wstar * I) / (fit.b * fit.vstar)};

    const int D = fit.diameter;
    auto verify = [&](const Matrix& op, std::span<const Matrix> projectors, Complex scale, const char* which) {
        const double op_norm = op.norm();
        for (int i = 0; i <= D; ++i) {
            const Complex lambda = qracah_eigenvalue(scale, fit.q, i, D);
            const Matrix& E = projectors[i];
            const double defect = (op * E - lambda * E).norm();
            if (defect > tol * (1 + op_norm) * (1 + E.norm())) {
                std::ostringstream msg;
                msg << which << " eigenvalue check failed at index " << i << ": defect " << defect;
                throw Error(ErrorKind::EigenvalueVerification, msg.str());
            }
        }
    };
    verify(gens.A, idempotents, fit.a, "normalized A");
    verify(gens.B, dual_idempotents, fit.b, "normalized A*");
    return gens;
}

} // namespace awgraph
