#pragma once

#include <span>
#include <vector>

#include "awgraph/graph.hpp"
#include "awgraph/types.hpp"

namespace awgraph {

/// Primitive idempotents of the Bose-Mesner algebra, eigenvalues in
/// descending order so that theta[0] = k and E[0] = J/n.
struct SpectralData {
    std::vector<double> eigenvalues;
    std::vector<Matrix> idempotents;
    std::vector<int> multiplicities;

    int diameter() const { return static_cast<int>(eigenvalues.size()) - 1; }
    int vertex_count() const { return static_cast<int>(idempotents.front().rows()); }
};

/// Merges sorted eigenvalues closer than 1e-7 (1 + max |θ|).
double eigenvalue_cluster_tolerance(std::span<const double> eigenvalues);

SpectralData spectral_decomposition(const DistanceRegularData& drg, double tol);

struct SpectralResiduals {
    double idempotent_products = 0; // max_ij ||E_iE_j - δ_ij E_i||_F
    double resolution = 0;          // ||Σ E_i - I||_F
    double adjacency = 0;           // ||A - Σ θ_i E_i||_F
    double trivial = 0;             // ||E_0 - J/n||_F
};

SpectralResiduals spectral_residuals(const SpectralData& spec, const IntMatrix& adjacency);

/// q^h_ij with E_i ∘ E_j = n^{-1} Σ_h q^h_ij E_h.
class KreinTensor {
public:
    KreinTensor() = default;
    KreinTensor(int diameter, int vertex_count)
        : d_(diameter), n_(vertex_count),
          values_((diameter + 1) * (diameter + 1) * (diameter + 1), 0.0) {}

    double operator()(int h, int i, int j) const { return values_[index(h, i, j)]; }
    double& operator()(int h, int i, int j) { return values_[index(h, i, j)]; }

    int diameter() const { return d_; }
    int vertex_count() const { return n_; }

    double min_entry() const;
    // Zero test for q^1_ij pattern checks: |q| <= 1e-9 n.
    double zero_threshold() const { return 1e-9 * n_; }

    // Largest Frobenius defect of the expansion of E_i ∘ E_j.
    double expansion_residual = 0;
    // Set when some entry is below -1e-9.
    bool has_negative = false;

private:
    std::size_t index(int h, int i, int j) const {
        return static_cast<std::size_t>((h * (d_ + 1) + i) * (d_ + 1) + j);
    }
    int d_ = 0;
    int n_ = 0;
    std::vector<double> values_;
};

KreinTensor krein_parameters(const SpectralData& spec, double tol);

/// Ordering E_{σ(1)}, ..., E_{σ(D)} of the nontrivial idempotents, as indices
/// into SpectralData.
struct QPolyOrdering {
    std::vector<int> nontrivial;

    /// Index list with the trivial idempotent 0 prepended.
    std::vector<int> full() const;
    bool operator==(const QPolyOrdering&) const = default;
};

bool is_qpoly_ordering(const KreinTensor& krein, const QPolyOrdering& ordering);

/// Every ordering satisfying the tridiagonal q^1 pattern, in lexicographic
/// order. Zero tests use KreinTensor::zero_threshold(). Requires D <= 12.
std::vector<QPolyOrdering> find_qpoly_orderings(const KreinTensor& krein);

/// Reorders idempotents and eigenvalues by a Q-polynomial ordering.
std::vector<Matrix> ordered_idempotents(const SpectralData& spec, const QPolyOrdering& ordering);
std::vector<double> ordered_eigenvalues(const SpectralData& spec, const QPolyOrdering& ordering);

} // namespace awgraph
