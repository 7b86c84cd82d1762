#include <doctest.h>

#include <cmath>
#include <numeric>

#include "awgraph/spectral.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace awgraph;

namespace {

SpectralData spectrum_of(const Graph& g)
{
    return spectral_decomposition(compute_distance_data(g), 1e-8);
}

} // namespace

TEST_CASE("hexagon and crown(5) spectra")
{
    const auto c6 = spectrum_of(generate_family(Family::Cycle, 6));
    REQUIRE(c6.eigenvalues.size() == 4);
    const double c6_theta[] = {2, 1, -1, -2};
    const int c6_mult[] = {1, 2, 2, 1};
    for (int i = 0; i < 4; ++i) {
        CHECK(c6.eigenvalues[i] == doctest::Approx(c6_theta[i]).epsilon(1e-12));
        CHECK(c6.multiplicities[i] == c6_mult[i]);
    }

    const auto crown = spectrum_of(generate_family(Family::Crown, 5));
    const double crown_theta[] = {4, 1, -1, -4};
    const int crown_mult[] = {1, 4, 4, 1};
    for (int i = 0; i < 4; ++i) {
        CHECK(crown.eigenvalues[i] == doctest::Approx(crown_theta[i]).epsilon(1e-12));
        CHECK(crown.multiplicities[i] == crown_mult[i]);
    }
}

TEST_CASE("eigenvalues agree with a Jacobi eigensolver")
{
    for (const auto& g : {generate_family(Family::Cycle, 6), generate_family(Family::Crown, 5),
                          generate_family(Family::Hadamard, 8), fixture("icosahedron.edges")}) {
        const auto spec = spectrum_of(g);
        const auto [values, mult] = oracle::distinct(oracle::jacobi_eigenvalues(oracle::to_grid(g.adjacency)), 1e-7);
        REQUIRE(values.size() == spec.eigenvalues.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            CHECK(std::abs(values[i] - spec.eigenvalues[i]) < 1e-9);
            CHECK(mult[i] == spec.multiplicities[i]);
        }
    }
}

TEST_CASE("idempotents resolve the adjacency matrix")
{
    const auto g = generate_family(Family::Hadamard, 8);
    const auto drg = compute_distance_data(g);
    const auto spec = spectral_decomposition(drg, 1e-8);
    const auto r = spectral_residuals(spec, drg.adjacency());
    CHECK(r.idempotent_products < 1e-10);
    CHECK(r.resolution < 1e-10);
    CHECK(r.adjacency < 1e-10);
    CHECK(r.trivial == 0);
    int total = std::accumulate(spec.multiplicities.begin(), spec.multiplicities.end(), 0);
    CHECK(total == g.n);
}

TEST_CASE("Krein parameters are nonnegative and give Q-polynomial orderings")
{
    const auto spec = spectrum_of(generate_family(Family::Cycle, 8));
    const auto krein = krein_parameters(spec, 1e-8 * 8);
    CHECK_FALSE(krein.has_negative);
    CHECK(krein.min_entry() > -1e-9);
    CHECK(krein.expansion_residual < 1e-10);
    // q^0_ij = m_i δ_ij
    for (int i = 0; i <= 4; ++i)
        CHECK(krein(0, i, i) == doctest::Approx(spec.multiplicities[i]).epsilon(1e-9));

    const auto orderings = find_qpoly_orderings(krein);
    REQUIRE(!orderings.empty());
    CHECK(orderings.front().full() == std::vector<int>{0, 1, 2, 3, 4});
    for (const auto& o : orderings)
        CHECK(is_qpoly_ordering(krein, o));
    CHECK_FALSE(is_qpoly_ordering(krein, QPolyOrdering{{2, 1, 3, 4}}));
}

TEST_CASE("Krein parameters do not depend on vertex labels")
{
    // Relabel the Heawood graph by i -> 3i mod 14 and compare q^h_ij.
    const auto g = fixture("heawood.edges");
    IntMatrix relabelled(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            relabelled((3 * i) % g.n, (3 * j) % g.n) = g.adjacency(i, j);
    const auto k1 = krein_parameters(spectrum_of(g), 1e-7);
    const auto k2 = krein_parameters(spectrum_of(make_graph(relabelled)), 1e-7);
    for (int h = 0; h <= 3; ++h)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                CHECK(std::abs(k1(h, i, j) - k2(h, i, j)) < 1e-9);
}

TEST_CASE("dodecahedron has no Q-polynomial ordering")
{
    const auto spec = spectrum_of(fixture("dodecahedron.edges"));
    CHECK(find_qpoly_orderings(krein_parameters(spec, 1e-7)).empty());
}
