#include <doctest.h>

#include <map>
#include <tuple>

#include "awgraph/pipeline.hpp"
#include "support.hpp"

using namespace awgraph;

namespace {

using Inventory = std::map<std::tuple<int, int, int>, int>;

Inventory inventory(const Attempt& a)
{
    Inventory inv;
    for (const auto& t : a.types)
        inv[{t.type.rho, t.type.tau, t.type.d}] += t.type.multiplicity();
    return inv;
}

PipelineConfig modules_only(std::uint64_t seed = 0)
{
    PipelineConfig c;
    c.stage = Stage::Modules;
    c.seed = seed;
    return c;
}

} // namespace

TEST_CASE("dual data at a vertex of the hexagon")
{
    const auto g = generate_family(Family::Cycle, 6);
    const auto stages = run_graph_stages(g, {});
    REQUIRE(!stages.error);
    const auto dual = build_dual_data(*stages.spectrum, stages.orderings.front(), *stages.drg, 2);
    CHECK(dual.cell_sizes == std::vector<int>{1, 2, 2, 1});
    // Bipartite with a self-dual ordering: θ*_i = θ_i.
    const double theta[] = {2, 1, -1, -2};
    for (int i = 0; i <= 3; ++i)
        CHECK(dual.dual_eigenvalues[i] == doctest::Approx(theta[i]).epsilon(1e-10));
    CHECK(dual.dual_adjacency(2, 2).real() == doctest::Approx(2.0));
    CHECK_THROWS_AS(build_dual_data(*stages.spectrum, stages.orderings.front(), *stages.drg, 6), Error);
}

TEST_CASE("algebra dimensions of small family graphs")
{
    struct Expected {
        Family family;
        int size;
        int T;
        int commutant;
    };
    for (const auto& e : {Expected{Family::Cycle, 6, 20, 2}, Expected{Family::Crown, 5, 20, 10},
                          Expected{Family::Hadamard, 8, 35, 86}}) {
        const auto a = analyze(generate_family(e.family, e.size), 0, modules_only());
        REQUIRE(a.status == "ok");
        CHECK(a.algebra->dim() == e.T);
        CHECK(*a.commutant_dim == e.commutant);
    }
}

TEST_CASE("hexagon and crown(5) module inventories")
{
    CHECK(inventory(analyze(generate_family(Family::Cycle, 6), 2, modules_only()))
          == Inventory{{{0, 0, 3}, 1}, {{1, 1, 1}, 1}});
    CHECK(inventory(analyze(generate_family(Family::Crown, 5), 0, modules_only()))
          == Inventory{{{0, 0, 3}, 1}, {{1, 1, 1}, 3}});
    CHECK(inventory(analyze(generate_family(Family::Hadamard, 8), 0, modules_only()))
          == Inventory{{{0, 0, 4}, 1}, {{1, 1, 2}, 7}, {{2, 2, 0}, 6}});
}

TEST_CASE("modules are invariant, irreducible and fill the standard module")
{
    const auto g = fixture("heawood.edges");
    const auto a = analyze(g, 3, modules_only());
    REQUIRE(a.status == "ok");
    const Matrix A = compute_distance_data(g).adjacency().cast<Complex>();
    int total = 0;
    Matrix sum = Matrix::Zero(g.n, g.n);
    for (const auto& m : a.modules) {
        CHECK(invariance_defect(m.basis, A, a.dual->dual_adjacency) < 1e-10);
        CHECK(orbit_dimension(m.basis, A, a.dual->dual_adjacency, 17) == m.dim());
        CHECK(m.thin);
        CHECK(m.dim() == m.d + 1);
        total += m.dim();
        sum += m.projector();
    }
    CHECK(total == g.n);
    CHECK((sum - Matrix::Identity(g.n, g.n)).norm() < 1e-9);
}

TEST_CASE("central idempotents commute with A and A*")
{
    const auto g = fixture("icosahedron.edges");
    const auto a = analyze(g, 0, modules_only());
    REQUIRE(a.status == "ok");
    const Matrix A = compute_distance_data(g).adjacency().cast<Complex>();
    const Matrix& As = a.dual->dual_adjacency;
    Matrix sum = Matrix::Zero(g.n, g.n);
    for (const auto& t : a.types) {
        const Matrix& e = t.type.projector;
        CHECK((e * A - A * e).norm() < 1e-9);
        CHECK((e * As - As * e).norm() < 1e-9);
        CHECK((e * e - e).norm() < 1e-9);
        CHECK(t.type.component_dim == t.type.multiplicity() * (t.type.d + 1));
        sum += e;
    }
    CHECK((sum - Matrix::Identity(g.n, g.n)).norm() < 1e-9);
}

TEST_CASE("type inventory does not depend on the seed")
{
    for (const auto& fc : kFamilyGraphs) {
        const auto g = generate_family(fc.family, fc.size);
        const auto reference = inventory(analyze(g, 0, modules_only(0)));
        for (std::uint64_t seed = 1; seed <= 4; ++seed)
            CHECK(inventory(analyze(g, 0, modules_only(seed))) == reference);
    }
}

TEST_CASE("algebra closure and commutant on small inputs")
{
    const Matrix I = Matrix::Identity(4, 4);
    const std::vector<Matrix> only_identity{I};
    CHECK(algebra_closure(only_identity, 16).dim() == 1);
    CHECK(commutant(only_identity).size() == 16);

    Matrix diag = Matrix::Zero(4, 4);
    diag.diagonal() << 1, 2, 3, 4;
    const std::vector<Matrix> diagonal{diag};
    CHECK(algebra_closure(diagonal, 16).dim() == 4);
    CHECK(commutant(diagonal).size() == 4);
    CHECK_THROWS_AS(algebra_closure(diagonal, 3), Error);

    const auto basis = algebra_closure(diagonal, 16);
    CHECK(basis.projection_residual(diag * diag) < 1e-12);
    Matrix off = Matrix::Zero(4, 4);
    off(0, 1) = 1;
    CHECK(basis.projection_residual(off) == doctest::Approx(1.0));
}

TEST_CASE("hypercubes decompose without a q-Racah fit")
{
    const auto a = analyze(generate_family(Family::Hypercube, 4), 0, modules_only());
    CHECK(a.status == "ok");
    CHECK(*a.thin);
}
