#include "awgraph/tmodule.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace awgraph {

namespace {

Complex frobenius_inner(const Matrix& x, const Matrix& y)
{
    // <x, y> = trace(y^H x)
    return (y.conjugate().cwiseProduct(x)).sum();
}

// Removes the components of m along an orthonormal family, twice.
void orthogonalize(Matrix& m, const std::vector<Matrix>& family)
{
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : family)
            m -= frobenius_inner(m, b) * b;
}

void orthogonalize(Vector& v, const std::vector<Vector>& family)
{
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : family)
            v -= b.dot(v) * b;
}

struct Cluster {
    Eigen::Index start = 0;
    Eigen::Index size = 0;
};

// Groups ascending eigenvalues whose neighbours differ by at most eps.
std::vector<Cluster> cluster_sorted(const Eigen::VectorXd& values, double eps)
{
    std::vector<Cluster> out;
    Eigen::Index i = 0;
    while (i < values.size()) {
        Eigen::Index j = i + 1;
        while (j < values.size() && values(j) - values(j - 1) <= eps)
            ++j;
        out.push_back({i, j - i});
        i = j;
    }
    return out;
}

Vector random_unit_combination(const Matrix& basis, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector coeffs(basis.cols());
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        coeffs(k) = Complex(re, im);
    }
    Vector v = basis * coeffs;
    return v / v.norm();
}

int numerical_rank(const Matrix& m, double eps)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > eps)
            ++r;
    return r;
}

// dim of {B^H C B : C in commutant}; 1 iff span(B) is an irreducible
// T-module, given that span(B) is T-invariant.
int endomorphism_dimension(const Matrix& basis, std::span<const Matrix> commutant_basis)
{
    const auto k = basis.cols();
    Matrix stacked(k * k, static_cast<Eigen::Index>(commutant_basis.size()));
    for (std::size_t c = 0; c < commutant_basis.size(); ++c) {
        const Matrix compressed = basis.adjoint() * commutant_basis[c] * basis;
        stacked.col(static_cast<Eigen::Index>(c)) = compressed.reshaped();
    }
    Eigen::JacobiSVD<Matrix> svd(stacked);
    const auto& s = svd.singularValues();
    if (s.size() == 0)
        return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > 1e-8 * std::max(1.0, s(0)))
            ++r;
    return r;
}

} // namespace

DualData build_dual_data(const SpectralData& spec, const QPolyOrdering& ordering,
                         const DistanceRegularData& drg, int vertex)
{
    const int n = drg.vertex_count();
    const int D = drg.diameter;
    if (vertex < 0 || vertex >= n)
        throw Error(ErrorKind::InvalidArgument, "base vertex out of range");
    const auto E = ordered_idempotents(spec, ordering);

    DualData dual;
    dual.vertex = vertex;
    dual.cell_sizes.assign(D + 1, 0);
    for (int i = 0; i <= D; ++i) {
        Matrix Es = Matrix::Zero(n, n);
        Matrix As = Matrix::Zero(n, n);
        for (int y = 0; y < n; ++y) {
            if (drg.distance(vertex, y) == i)
                Es(y, y) = 1.0;
            As(y, y) = static_cast<double>(n) * E[i](vertex, y).real();
        }
        dual.dual_idempotents.push_back(std::move(Es));
        dual.dual_distance.push_back(std::move(As));
    }
    dual.dual_adjacency = dual.dual_distance.at(1);

    // θ*_i is the constant value of n (E_1)_xy over the cell Γ_i(x).
    std::vector<std::vector<double>> cells(D + 1);
    for (int y = 0; y < n; ++y) {
        const int i = drg.distance(vertex, y);
        cells[i].push_back(dual.dual_adjacency(y, y).real());
        ++dual.cell_sizes[i];
    }
    double scale = 0;
    for (const auto& c : cells)
        for (double v : c)
            scale = std::max(scale, std::abs(v));
    for (int i = 0; i <= D; ++i) {
        const auto [lo, hi] = std::minmax_element(cells[i].begin(), cells[i].end());
        if (*hi - *lo > 1e-8 * (1 + scale))
            throw Error(ErrorKind::DualEigenvalueCollision,
                        "dual adjacency is not constant on distance cell " + std::to_string(i));
        double mean = 0;
        for (double v : cells[i])
            mean += v;
        dual.dual_eigenvalues.push_back(mean / static_cast<double>(cells[i].size()));
    }
    const double eps = eigenvalue_cluster_tolerance(dual.dual_eigenvalues);
    for (int i = 0; i <= D; ++i)
        for (int j = i + 1; j <= D; ++j)
            if (std::abs(dual.dual_eigenvalues[i] - dual.dual_eigenvalues[j]) <= eps) {
                std::ostringstream msg;
                msg << "dual eigenvalues θ*_" << i << " and θ*_" << j << " coincide at vertex " << vertex;
                throw Error(ErrorKind::DualEigenvalueCollision, msg.str());
            }
    return dual;
}

double AlgebraBasis::projection_residual(const Matrix& m) const
{
    Matrix r = m;
    orthogonalize(r, basis);
    return r.norm();
}

AlgebraBasis algebra_closure(std::span<const Matrix> generators, int cap)
{
    if (generators.empty())
        throw Error(ErrorKind::InvalidArgument, "algebra closure needs at least one generator");
    const auto n = generators.front().rows();

    AlgebraBasis alg;
    alg.basis.push_back(Matrix::Identity(n, n) / std::sqrt(static_cast<double>(n)));

    // Words in the generators are spanned by G * (shorter word), so closing
    // the span of I under left multiplication reaches all of T.
    for (std::size_t next = 0; next < alg.basis.size(); ++next)
        for (const auto& g : generators) {
            // Same noise floor as orbit_dimension: basis elements are unit.
            Matrix m = g * alg.basis[next];
            orthogonalize(m, alg.basis);
            const double after = m.norm();
            if (after <= 1e-9 * (1 + g.norm()))
                continue;
            alg.basis.push_back(m / after);
            if (alg.dim() > cap)
                throw Error(ErrorKind::AlgebraCapExceeded,
                            "algebra dimension exceeds cap " + std::to_string(cap));
        }
    return alg;
}

std::vector<Matrix> commutant(std::span<const Matrix> generators)
{
    if (generators.empty())
        throw Error(ErrorKind::InvalidArgument, "commutant needs at least one generator");
    const auto n = generators.front().rows();

    // A matrix commuting with a Hermitian pivot generator is block diagonal
    // in its eigenbasis, one block per eigenvalue. Choose the generator whose
    // blocks leave the fewest unknowns; the remaining generators give a
    // linear system on those unknowns.
    std::size_t pivot = 0;
    Matrix Q;
    std::vector<Cluster> blocks;
    Eigen::Index unknowns = -1;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(generators[g]);
        const Eigen::VectorXd& values = solver.eigenvalues();
        const double eps = 1e-8 * (1 + values.cwiseAbs().maxCoeff());
        auto clusters = cluster_sorted(values, eps);
        Eigen::Index count = 0;
        for (const auto& c : clusters)
            count += c.size * c.size;
        if (unknowns < 0 || count < unknowns) {
            unknowns = count;
            pivot = g;
            Q = solver.eigenvectors();
            blocks = std::move(clusters);
        }
    }

    struct Unknown {
        Eigen::Index row, col;
    };
    std::vector<Unknown> cells;
    cells.reserve(static_cast<std::size_t>(unknowns));
    for (const auto& b : blocks)
        for (Eigen::Index r = 0; r < b.size; ++r)
            for (Eigen::Index c = 0; c < b.size; ++c)
                cells.push_back({b.start + r, b.start + c});

    std::vector<Matrix> rotated;
    for (std::size_t g = 0; g < generators.size(); ++g)
        if (g != pivot)
            rotated.push_back(Q.adjoint() * generators[g] * Q);

    const auto N = static_cast<Eigen::Index>(cells.size());
    Matrix null_basis;
    if (rotated.empty()) {
        null_basis = Matrix::Identity(N, N);
    } else {
        // Column u holds vec(X G - G X) for X = e_row e_col^T.
        Matrix K = Matrix::Zero(static_cast<Eigen::Index>(rotated.size()) * n * n, N);
        for (Eigen::Index u = 0; u < N; ++u) {
            const auto [a, b] = cells[static_cast<std::size_t>(u)];
            for (std::size_t g = 0; g < rotated.size(); ++g) {
                const Matrix& G = rotated[g];
                const Eigen::Index offset = static_cast<Eigen::Index>(g) * n * n;
                for (Eigen::Index j = 0; j < n; ++j)
                    K(offset + j * n + a, u) += G(b, j);
                for (Eigen::Index i = 0; i < n; ++i)
                    K(offset + b * n + i, u) -= G(i, a);
            }
        }
        // JacobiSVD: Eigen 3.4.0's complex BDCSVD returns a wrong null space
        // for some of these systems (icosahedron with its second ordering).
        Eigen::JacobiSVD<Matrix> svd(K, Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        const double eps = 1e-8 * std::max(1.0, s.size() ? s(0) : 0.0);
        Eigen::Index rank = 0;
        while (rank < s.size() && s(rank) > eps)
            ++rank;
        null_basis = svd.matrixV().rightCols(N - rank);
    }

    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(null_basis.cols()));
    for (Eigen::Index k = 0; k < null_basis.cols(); ++k) {
        Matrix X = Matrix::Zero(n, n);
        for (Eigen::Index u = 0; u < N; ++u)
            X(cells[static_cast<std::size_t>(u)].row, cells[static_cast<std::size_t>(u)].col) = null_basis(u, k);
        out.push_back(Q * X * Q.adjoint());
    }
    return out;
}

double invariance_defect(const Matrix& basis, const Matrix& A, const Matrix& Astar)
{
    double worst = 0;
    for (const Matrix* S : {&A, &Astar}) {
        const Matrix image = (*S) * basis;
        const Matrix outside = image - basis * (basis.adjoint() * image);
        for (Eigen::Index c = 0; c < outside.cols(); ++c)
            worst = std::max(worst, outside.col(c).norm());
    }
    return worst;
}

int orbit_dimension(const Matrix& basis, const Matrix& A, const Matrix& Astar, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Vector> span{random_unit_combination(basis, rng)};
    for (std::size_t next = 0; next < span.size(); ++next)
        for (const Matrix* S : {&A, &Astar}) {
            // Span vectors are unit, so ||S|| bounds ||S w||; anything far
            // below that is rounding noise, e.g. S w for a zero eigenvalue.
            Vector w = (*S) * span[next];
            orthogonalize(w, span);
            const double after = w.norm();
            if (after > 1e-8 * (1 + S->norm()))
                span.push_back(w / after);
            if (span.size() > static_cast<std::size_t>(A.rows()))
                return static_cast<int>(span.size());
        }
    return static_cast<int>(span.size());
}

Decomposition decompose_modules(const Matrix& A, const DualData& dual, const DecompositionOptions& options)
{
    const Matrix& Astar = dual.dual_adjacency;
    const auto n = A.rows();
    const std::vector<Matrix> gens{A, Astar};
    const auto comm = commutant(gens);

    Decomposition out;
    out.commutant_dim = static_cast<int>(comm.size());

    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double scale = 1 + A.norm() + Astar.norm();

    for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
        out.attempts = attempt;
        Matrix H = Matrix::Zero(n, n);
        for (const auto& c : comm) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            H += Complex(re, im) * c;
        }
        H = (H + H.adjoint()) / 2.0;

        Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
        const Eigen::VectorXd& values = solver.eigenvalues();
        const double eps = 1e-9 * (1 + values.cwiseAbs().maxCoeff());

        std::vector<IrreducibleModule> modules;
        bool ok = true;
        for (const auto& cluster : cluster_sorted(values, eps)) {
            IrreducibleModule m;
            m.basis = solver.eigenvectors().middleCols(cluster.start, cluster.size);
            if (invariance_defect(m.basis, A, Astar) > options.tol * scale
                || orbit_dimension(m.basis, A, Astar, options.seed + attempt) != m.dim()
                || endomorphism_dimension(m.basis, comm) != 1) {
                ok = false;
                break;
            }
            modules.push_back(std::move(m));
        }
        if (ok) {
            out.modules = std::move(modules);
            return out;
        }
    }
    throw Error(ErrorKind::IrreducibilityFailure, "could not split the standard module into irreducible "
                                                  "T-modules after "
                                                      + std::to_string(options.max_attempts) + " attempts");
}

double rank_tolerance(int n)
{
    return 1e-7 * std::sqrt(static_cast<double>(n));
}

void profile_module(IrreducibleModule& module, std::span<const Matrix> idempotents, const DualData& dual)
{
    const int D = static_cast<int>(dual.dual_idempotents.size()) - 1;
    const int n = static_cast<int>(module.basis.rows());
    const double eps = rank_tolerance(n);

    module.dual_cell_dims.assign(D + 1, 0);
    module.eigen_dims.assign(D + 1, 0);
    for (int i = 0; i <= D; ++i) {
        module.dual_cell_dims[i] = numerical_rank(dual.dual_idempotents[i] * module.basis, eps);
        module.eigen_dims[i] = numerical_rank(idempotents[i] * module.basis, eps);
    }

    // Support must be a contiguous interval; returns (start, length).
    auto support = [&](const std::vector<int>& dims, const char* which) {
        int first = -1, last = -1;
        for (int i = 0; i <= D; ++i)
            if (dims[i] > 0) {
                if (first < 0)
                    first = i;
                last = i;
            }
        if (first < 0)
            throw Error(ErrorKind::NonContiguousSupport, std::string("module has empty ") + which + " support");
        for (int i = first; i <= last; ++i)
            if (dims[i] == 0)
                throw Error(ErrorKind::NonContiguousSupport,
                            std::string("module ") + which + " support is not contiguous");
        return std::make_pair(first, last - first);
    };
    std::tie(module.rho, module.d) = support(module.dual_cell_dims, "dual idempotent");
    std::tie(module.tau, module.dstar) = support(module.eigen_dims, "idempotent");
    if (module.d != module.dstar)
        throw Error(ErrorKind::DiameterMismatch, "module diameter " + std::to_string(module.d)
                                                     + " differs from dual diameter " + std::to_string(module.dstar));
    module.thin = std::all_of(module.dual_cell_dims.begin(), module.dual_cell_dims.end(),
                              [](int k) { return k <= 1; })
                  && std::all_of(module.eigen_dims.begin(), module.eigen_dims.end(), [](int k) { return k <= 1; });
}

void sort_modules(std::vector<IrreducibleModule>& modules)
{
    std::stable_sort(modules.begin(), modules.end(), [](const auto& l, const auto& r) {
        return std::tie(l.rho, l.tau, l.d) < std::tie(r.rho, r.tau, r.d);
    });
}

bool parameter_arrays_match(const ParameterArray& l, const ParameterArray& r, double tol)
{
    auto same = [tol](const std::vector<Complex>& x, const std::vector<Complex>& y) {
        if (x.size() != y.size())
            return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (std::abs(x[i] - y[i]) > tol * (1 + std::abs(x[i]) + std::abs(y[i])))
                return false;
        return true;
    };
    return same(l.theta, r.theta) && same(l.theta_star, r.theta_star) && same(l.varphi, r.varphi)
           && same(l.phi, r.phi);
}

std::vector<TypeData> classify_types(std::vector<IrreducibleModule>& modules,
                                     std::span<const ParameterArray> arrays, const Matrix& A,
                                     const Matrix& Astar, double tol)
{
    if (arrays.size() != modules.size())
        throw Error(ErrorKind::InvalidArgument, "one parameter array per module is required");
    for (std::size_t m = 0; m < modules.size(); ++m)
        if (!modules[m].thin)
            throw Error(ErrorKind::NonThinModule, "module " + std::to_string(m) + " (endpoint "
                                                      + std::to_string(modules[m].rho) + ", dim "
                                                      + std::to_string(modules[m].dim()) + ") is not thin");

    std::vector<TypeData> types;
    for (std::size_t m = 0; m < modules.size(); ++m) {
        const auto& mod = modules[m];
        TypeData* home = nullptr;
        for (auto& t : types) {
            const bool same_key = t.rho == mod.rho && t.tau == mod.tau && t.d == mod.d;
            const bool same_array = parameter_arrays_match(arrays[t.representative], arrays[m], tol);
            if (same_key && same_array) {
                home = &t;
                break;
            }
            if (same_array && !same_key)
                throw Error(ErrorKind::AmbiguousGrouping,
                            "modules with different (endpoint, dual endpoint, diameter) share a parameter array");
        }
        if (home == nullptr) {
            TypeData t;
            t.rho = mod.rho;
            t.tau = mod.tau;
            t.d = mod.d;
            t.representative = static_cast<int>(m);
            types.push_back(std::move(t));
            home = &types.back();
        }
        home->members.push_back(static_cast<int>(m));
    }

    // Deterministic order: by key, then by the representative's array.
    auto array_less = [](const ParameterArray& l, const ParameterArray& r) {
        auto key = [](const ParameterArray& p) {
            std::vector<double> k;
            for (const auto* seq : {&p.theta, &p.theta_star, &p.varphi, &p.phi})
                for (auto z : *seq) {
                    k.push_back(std::round(z.real() * 1e8));
                    k.push_back(std::round(z.imag() * 1e8));
                }
            return k;
        };
        return key(l) < key(r);
    };
    std::stable_sort(types.begin(), types.end(), [&](const TypeData& l, const TypeData& r) {
        if (std::tie(l.rho, l.tau, l.d) != std::tie(r.rho, r.tau, r.d))
            return std::tie(l.rho, l.tau, l.d) < std::tie(r.rho, r.tau, r.d);
        return array_less(arrays[l.representative], arrays[r.representative]);
    });

    const auto n = A.rows();
    const double scale = 1 + A.norm() + Astar.norm();
    for (std::size_t psi = 0; psi < types.size(); ++psi) {
        auto& t = types[psi];
        t.psi = static_cast<int>(psi);
        t.projector = Matrix::Zero(n, n);
        t.component_dim = 0;
        for (int m : t.members) {
            modules[m].type_id = t.psi;
            t.projector += modules[m].projector();
            t.component_dim += modules[m].dim();
        }
        const double defect = std::max((t.projector * A - A * t.projector).norm(),
                                       (t.projector * Astar - Astar * t.projector).norm());
        if (defect > tol * scale)
            throw Error(ErrorKind::CentralityDefect, "central idempotent of type " + std::to_string(psi)
                                                         + " does not commute with A and A*");
    }
    return types;
}

} // namespace awgraph
