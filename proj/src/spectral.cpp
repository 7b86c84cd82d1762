#include "awgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace awgraph {

double eigenvalue_cluster_tolerance(std::span<const double> eigenvalues)
{
    double biggest = 0;
    for (double t : eigenvalues)
        biggest = std::max(biggest, std::abs(t));
    return 1e-7 * (1.0 + biggest);
}

SpectralData spectral_decomposition(const DistanceRegularData& drg, double tol)
{
    const int n = drg.vertex_count();
    const int D = drg.diameter;
    const Eigen::MatrixXd A = drg.adjacency().cast<double>();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::EigenvalueCount, "symmetric eigensolver did not converge");

    // Eigen returns ascending order; walk backwards to get descending clusters.
    const Eigen::VectorXd& values = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();
    std::vector<double> all(values.data(), values.data() + n);
    const double eps = eigenvalue_cluster_tolerance(all);

    SpectralData spec;
    int hi = n - 1;
    while (hi >= 0) {
        int lo = hi;
        while (lo - 1 >= 0 && values(hi) - values(lo - 1) <= eps)
            --lo;
        const int m = hi - lo + 1;
        const Eigen::MatrixXd block = vectors.middleCols(lo, m);
        spec.eigenvalues.push_back(values.segment(lo, m).mean());
        spec.multiplicities.push_back(m);
        spec.idempotents.push_back((block * block.transpose()).cast<Complex>());
        hi = lo - 1;
    }

    if (static_cast<int>(spec.eigenvalues.size()) != D + 1) {
        std::ostringstream msg;
        msg << "found " << spec.eigenvalues.size() << " distinct eigenvalues, expected D+1 = " << D + 1;
        throw Error(ErrorKind::EigenvalueCount, msg.str());
    }
    if (std::abs(spec.eigenvalues.front() - drg.valency) > eps)
        throw Error(ErrorKind::EigenvalueCount, "largest eigenvalue differs from the valency");

    // Replace the leading projector with the exact J/n.
    spec.idempotents.front() = Matrix::Constant(n, n, Complex(1.0 / n, 0.0));

    const SpectralResiduals res = spectral_residuals(spec, drg.adjacency());
    const double bound = tol * n;
    if (res.idempotent_products > bound || res.resolution > bound || res.adjacency > bound) {
        std::ostringstream msg;
        msg << "spectral decomposition residuals exceed " << bound << ": products "
            << res.idempotent_products << ", resolution " << res.resolution << ", adjacency "
            << res.adjacency;
        throw Error(ErrorKind::EigenvalueCount, msg.str());
    }
    return spec;
}

SpectralResiduals spectral_residuals(const SpectralData& spec, const IntMatrix& adjacency)
{
    const auto n = adjacency.rows();
    const std::size_t count = spec.idempotents.size();
    SpectralResiduals res;
    Matrix sum = Matrix::Zero(n, n);
    Matrix reconstructed = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < count; ++i) {
        sum += spec.idempotents[i];
        reconstructed += spec.eigenvalues[i] * spec.idempotents[i];
        for (std::size_t j = 0; j < count; ++j) {
            Matrix prod = spec.idempotents[i] * spec.idempotents[j];
            if (i == j)
                prod -= spec.idempotents[i];
            res.idempotent_products = std::max(res.idempotent_products, prod.norm());
        }
    }
    res.resolution = (sum - Matrix::Identity(n, n)).norm();
    res.adjacency = (adjacency.cast<double>().cast<Complex>() - reconstructed).norm();
    res.trivial = (spec.idempotents.front() - Matrix::Constant(n, n, Complex(1.0 / n, 0.0))).norm();
    return res;
}

double KreinTensor::min_entry() const
{
    return values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
}

KreinTensor krein_parameters(const SpectralData& spec, double tol)
{
    const int D = spec.diameter();
    const int n = spec.vertex_count();
    KreinTensor krein(D, n);

    // The idempotents are real symmetric; work on the real parts.
    std::vector<Eigen::MatrixXd> E;
    E.reserve(D + 1);
    for (const auto& m : spec.idempotents)
        E.push_back(m.real());

    for (int i = 0; i <= D; ++i)
        for (int j = i; j <= D; ++j) {
            const Eigen::MatrixXd product = E[i].cwiseProduct(E[j]);
            Eigen::MatrixXd expansion = Eigen::MatrixXd::Zero(n, n);
            for (int h = 0; h <= D; ++h) {
                // <E_h, E_h>_F = trace E_h = m_h
                const double q = n * product.cwiseProduct(E[h]).sum() / spec.multiplicities[h];
                krein(h, i, j) = q;
                krein(h, j, i) = q;
                expansion += (q / n) * E[h];
            }
            krein.expansion_residual = std::max(krein.expansion_residual, (product - expansion).norm());
        }

    krein.has_negative = krein.min_entry() < -1e-9;
    if (krein.expansion_residual > tol) {
        std::ostringstream msg;
        msg << "entrywise products leave the Bose-Mesner algebra: residual " << krein.expansion_residual;
        throw Error(ErrorKind::KreinResidual, msg.str());
    }
    return krein;
}

std::vector<int> QPolyOrdering::full() const
{
    std::vector<int> out;
    out.reserve(nontrivial.size() + 1);
    out.push_back(0);
    out.insert(out.end(), nontrivial.begin(), nontrivial.end());
    return out;
}

namespace {

// Checks every pair (p, j) with j < p against the q^1 pattern.
bool position_consistent(const KreinTensor& krein, const std::vector<int>& order, int p)
{
    const double zero = krein.zero_threshold();
    const int first = order[1];
    for (int j = 0; j < p; ++j) {
        const double value = std::abs(krein(first, order[p], order[j]));
        const int gap = p - j;
        if (gap > 1 && value > zero)
            return false;
        if (gap == 1 && value <= zero)
            return false;
    }
    return true;
}

} // namespace

bool is_qpoly_ordering(const KreinTensor& krein, const QPolyOrdering& ordering)
{
    const int D = krein.diameter();
    if (static_cast<int>(ordering.nontrivial.size()) != D)
        return false;
    std::vector<int> sorted = ordering.nontrivial;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < D; ++i)
        if (sorted[i] != i + 1)
            return false;
    const auto order = ordering.full();
    for (int p = 1; p <= D; ++p)
        if (!position_consistent(krein, order, p))
            return false;
    return true;
}

std::vector<QPolyOrdering> find_qpoly_orderings(const KreinTensor& krein)
{
    const int D = krein.diameter();
    if (D > 12)
        throw Error(ErrorKind::InvalidArgument, "Q-polynomial search supports D <= 12");

    std::vector<QPolyOrdering> found;
    std::vector<int> order(D + 1, 0);
    std::vector<bool> used(D + 1, false);

    // Depth-first over all permutations, pruning as soon as a prefix breaks
    // the pattern. Equivalent to exhaustive enumeration of D! orderings.
    std::function<void(int)> extend = [&](int p) {
        if (p > D) {
            found.push_back(QPolyOrdering{std::vector<int>(order.begin() + 1, order.end())});
            return;
        }
        for (int idx = 1; idx <= D; ++idx) {
            if (used[idx])
                continue;
            order[p] = idx;
            if (!position_consistent(krein, order, p))
                continue;
            used[idx] = true;
            extend(p + 1);
            used[idx] = false;
        }
    };
    if (D >= 1)
        extend(1);
    return found;
}

std::vector<Matrix> ordered_idempotents(const SpectralData& spec, const QPolyOrdering& ordering)
{
    std::vector<Matrix> out;
    for (int idx : ordering.full())
        out.push_back(spec.idempotents.at(idx));
    return out;
}

std::vector<double> ordered_eigenvalues(const SpectralData& spec, const QPolyOrdering& ordering)
{
    std::vector<double> out;
    for (int idx : ordering.full())
        out.push_back(spec.eigenvalues.at(idx));
    return out;
}

} // namespace awgraph
