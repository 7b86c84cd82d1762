#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "awgraph/graph.hpp"
#include "awgraph/spectral.hpp"
#include "awgraph/types.hpp"

namespace awgraph {

/// Dual idempotents and dual distance matrices at a base vertex.
struct DualData {
    int vertex = 0;
    std::vector<Matrix> dual_idempotents;    // E*_0..E*_D
    std::vector<Matrix> dual_distance;       // A*_0..A*_D
    Matrix dual_adjacency;                   // A* = A*_1
    std::vector<double> dual_eigenvalues;    // θ*_0..θ*_D
    std::vector<int> cell_sizes;             // |Γ_i(x)|
};

/// `spec` is reordered internally by `ordering`, which decides A* = A*_1.
DualData build_dual_data(const SpectralData& spec, const QPolyOrdering& ordering,
                         const DistanceRegularData& drg, int vertex);

/// Frobenius-orthonormal basis of the algebra generated by `generators`.
struct AlgebraBasis {
    std::vector<Matrix> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    /// ||M - P(M)||_F for the orthogonal projection P onto the span.
    double projection_residual(const Matrix& m) const;
};

/// Closes {I} under left multiplication by the generators. Throws
/// AlgebraCapExceeded if the dimension passes `cap`.
AlgebraBasis algebra_closure(std::span<const Matrix> generators, int cap);

/// Orthonormal basis of {M : MG = GM for every generator}. The generators
/// must be Hermitian; the span is then closed under conjugate transpose.
std::vector<Matrix> commutant(std::span<const Matrix> generators);

struct IrreducibleModule {
    Matrix basis; // n x dim, orthonormal columns
    int rho = 0;      // endpoint
    int tau = 0;      // dual endpoint
    int d = 0;        // diameter
    int dstar = 0;    // dual diameter
    bool thin = false;
    int type_id = -1;
    std::vector<int> dual_cell_dims; // dim E*_i W
    std::vector<int> eigen_dims;     // dim E_i W

    int dim() const { return static_cast<int>(basis.cols()); }
    Matrix projector() const { return basis * basis.adjoint(); }
};

struct DecompositionOptions {
    std::uint64_t seed = 0;
    int max_attempts = 5;
    double tol = 1e-8;
};

struct Decomposition {
    std::vector<IrreducibleModule> modules; // unprofiled, ordered by H eigenvalue
    int commutant_dim = 0;
    int attempts = 0;
};

/// Splits the standard module by the eigenspaces of a random Hermitian
/// element of the commutant of {A, A*}.
Decomposition decompose_modules(const Matrix& A, const DualData& dual, const DecompositionOptions& options);

/// max over basis vectors w of ||(I - P_W) S w|| for S in {A, A*}.
double invariance_defect(const Matrix& basis, const Matrix& A, const Matrix& Astar);

/// Dimension of the span of T v for v a random vector of W.
int orbit_dimension(const Matrix& basis, const Matrix& A, const Matrix& Astar, std::uint64_t seed);

double rank_tolerance(int n);

/// Fills rho, tau, d, dstar, thin and the per-cell dimensions. `idempotents`
/// follow the Q-polynomial ordering.
void profile_module(IrreducibleModule& module, std::span<const Matrix> idempotents, const DualData& dual);

/// Sorts profiled modules by (rho, tau, d) keeping the relative order of
/// equal keys.
void sort_modules(std::vector<IrreducibleModule>& modules);

/// Complete isomorphism invariant of a thin module: its parameter array.
struct ParameterArray {
    std::vector<Complex> theta, theta_star, varphi, phi;
};

bool parameter_arrays_match(const ParameterArray& l, const ParameterArray& r, double tol);

struct TypeData {
    int psi = 0;
    int rho = 0, tau = 0, d = 0;
    std::vector<int> members; // module indices
    int representative = 0;
    Matrix projector;          // e_ψ
    int component_dim = 0;     // dim V_ψ

    int multiplicity() const { return static_cast<int>(members.size()); }
};

/// Groups thin modules by (rho, tau, d) and parameter array. Type ids follow
/// the order of first appearance; module.type_id is updated.
std::vector<TypeData> classify_types(std::vector<IrreducibleModule>& modules,
                                     std::span<const ParameterArray> arrays, const Matrix& A,
                                     const Matrix& Astar, double tol);

} // namespace awgraph
