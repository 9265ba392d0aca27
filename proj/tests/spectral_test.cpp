#include <Eigen/Eigenvalues>
#include <catch2/catch_amalgamated.hpp>

#include "circulant/extremal.hpp"
#include "circulant/spectral.hpp"
#include "oracles.hpp"

using namespace circulant;

namespace {

// Dense symmetric eigensolver on the materialized adjacency matrix,
// returned as a sorted multiset.
std::vector<double> dense_eigen_multiset(const CirculantGraph& G) {
    const int64 n = G.order();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int64 i = 0; i < n; ++i) {
        const std::vector<bool> row = adjacency_row(G, i);
        for (int64 j = 0; j < n; ++j) A(i, j) = row[j] ? 1.0 : 0.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("numeric eigenvalues of small graphs") {
    const std::vector<double> c6 = {2, 1, -1, -2, -1, 1};
    const Spectrum s6 = eigenvalues_numeric(CirculantGraph::create(6, {1, 5}));
    for (int64 j = 0; j < 6; ++j) {
        CHECK(std::abs(s6.numeric_values()[j].real() - c6[j]) < 1e-9);
        CHECK(std::abs(s6.numeric_values()[j].imag()) < 1e-9);
    }
    const Spectrum s4 = eigenvalues_numeric(CirculantGraph::create(4, {1, 3}));
    const std::vector<double> c4 = {2, 0, -2, 0};
    for (int64 j = 0; j < 4; ++j)
        CHECK(std::abs(s4.numeric_values()[j].real() - c4[j]) < 1e-9);
    const Spectrum empty = eigenvalues_numeric(CirculantGraph::create(5, {}));
    for (const auto& z : empty.numeric_values()) CHECK(std::abs(z) < 1e-12);
}

TEST_CASE("exact eigenvalues of small graphs") {
    CHECK(eigenvalues_exact(DivisorSet::create(6, {1})).exact_values() ==
          std::vector<int64>{2, 1, -1, -2, -1, 1});
    CHECK(eigenvalues_exact(DivisorSet::create(4, {1, 2})).exact_values() ==
          std::vector<int64>{3, -1, -1, -1});
    CHECK(eigenvalues_exact(DivisorSet::create(4, {1})).exact_values() ==
          std::vector<int64>{2, 0, -2, 0});
}

TEST_CASE("exact and numeric spectra agree for integral graphs up to order 40") {
    for (int64 n = 2; n <= 40; ++n)
        for (const DivisorSet& D : enumerate_integral(n)) {
            const std::vector<int64> exact = eigenvalues_exact(D).exact_values();
            const std::vector<std::complex<double>> numeric =
                eigenvalues_numeric(from_divisor_set(D)).numeric_values();
            for (int64 j = 0; j < n; ++j) {
                REQUIRE(std::abs(numeric[j].real() - exact[j]) < 1e-9);
                REQUIRE(std::abs(numeric[j].imag()) < 1e-9);
            }
        }
}

TEST_CASE("character sums match a dense eigensolver on random symbols") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 50) {
        const int64 n = 2 + static_cast<int64>(rng() % 31);
        const CirculantGraph G = oracle::random_symbol_graph(n, rng);
        std::vector<double> mine = eigenvalues_numeric(G).real_values();
        std::sort(mine.begin(), mine.end());
        const std::vector<double> reference = dense_eigen_multiset(G);
        for (int64 j = 0; j < n; ++j) REQUIRE(std::abs(mine[j] - reference[j]) < 1e-6);
        ++done;
    }
}

TEST_CASE("index 0 carries the degree and the exact spectrum is traceless") {
    for (int64 n = 2; n <= 60; ++n)
        for (const DivisorSet& D : enumerate_integral(n)) {
            const std::vector<int64> values = eigenvalues_exact(D).exact_values();
            REQUIRE(values[0] == D.degree());
            int64 trace = 0;
            for (int64 v : values) trace += v;
            REQUIRE(trace == 0);
        }
}

TEST_CASE("modulus-ordered view") {
    const Spectrum s = Spectrum::from_exact(6, {2, 1, -1, -2, -1, 1});
    CHECK(s.sorted_by_modulus().exact_values() == std::vector<int64>{2, -2, 1, 1, -1, -1});
}

TEST_CASE("distinct eigenvalue count") {
    CHECK(distinct_eigenvalue_count(Spectrum::from_exact(4, {3, -1, -1, -1})) == 2);
    CHECK(distinct_eigenvalue_count(eigenvalues_numeric(CirculantGraph::create(5, {1, 4}))) ==
          3);
    CHECK(distinct_eigenvalue_count(eigenvalues_numeric(CirculantGraph::create(7, {1, 6}))) ==
          4);
}

TEST_CASE("rational reconstruction of doubles") {
    const RationalApprox r1 = reconstruct_rational(7.0 / 3.0, 1000000);
    REQUIRE(r1.ok);
    CHECK(r1.p == 7);
    CHECK(r1.q == 3);
    CHECK(r1.residual < 1e-12);
    const RationalApprox r2 = reconstruct_rational(-0.5, 1000000);
    REQUIRE(r2.ok);
    CHECK(r2.p == -1);
    CHECK(r2.q == 2);
    CHECK_FALSE(reconstruct_rational(std::numbers::phi, 1000000).ok);
    CHECK_FALSE(reconstruct_rational(std::numbers::sqrt2, 1000000).ok);
}

TEST_CASE("ratio condition") {
    CHECK(ratio_condition(Spectrum::from_exact(6, {2, 1, -1, -2, -1, 1})));
    CHECK(ratio_condition(Spectrum::from_exact(4, {3, -1, -1, -1})));
    CHECK_THROWS_AS(ratio_condition(Spectrum::from_numeric(1, {{0.0, 0.0}})),
                    std::invalid_argument);
}

TEST_CASE("numeric ratio condition heuristic") {
    // integral graph: all difference ratios are rational
    const CirculantGraph g8 = from_divisor_set(DivisorSet::create(8, {1, 2}));
    CHECK(ratio_condition_numeric(eigenvalues_numeric(g8), 1000000));
    // pentagon and heptagon: golden-ratio / heptagonal relations fail the probe
    CHECK_FALSE(
        ratio_condition_numeric(eigenvalues_numeric(CirculantGraph::create(5, {1, 4})),
                                1000000));
    CHECK_FALSE(
        ratio_condition_numeric(eigenvalues_numeric(CirculantGraph::create(7, {1, 6})),
                                1000000));
    // constant spectrum leaves no valid denominator pair
    CHECK_THROWS_AS(
        ratio_condition_numeric(eigenvalues_numeric(CirculantGraph::create(4, {})), 1000000),
        std::invalid_argument);
}

TEST_CASE("integrality matches the ratio condition on small connected graphs") {
    for (int64 n = 4; n <= 14; ++n)
        for (const CirculantGraph& G : oracle::all_symbol_graphs(n)) {
            if (!is_connected(G)) continue;
            const Spectrum numeric = eigenvalues_numeric(G);
            if (distinct_eigenvalue_count(numeric) < 4) continue;
            const auto D = integrality_decomposition(G);
            if (D) {
                REQUIRE(ratio_condition(eigenvalues_exact(*D)));
            } else {
                REQUIRE_FALSE(ratio_condition_numeric(numeric, 1000000));
            }
        }
}

TEST_CASE("spectral bipartiteness test") {
    CHECK(is_bipartite_spectral(Spectrum::from_exact(6, {2, 1, -1, -2, -1, 1}), 2));
    CHECK_FALSE(is_bipartite_spectral(Spectrum::from_exact(4, {3, -1, -1, -1}), 3));
    CHECK(is_bipartite_spectral(Spectrum::from_exact(4, {2, 0, -2, 0}), 2));
    CHECK(is_bipartite_spectral(eigenvalues_numeric(CirculantGraph::create(6, {1, 5})), 2));
}

TEST_CASE("divisor-set bipartiteness criterion") {
    const auto c6 = bipartite_divisor_test(DivisorSet::create(6, {1}));
    REQUIRE(c6.has_value());
    CHECK(*c6 == 3);
    CHECK_FALSE(bipartite_divisor_test(DivisorSet::create(4, {1, 2})).has_value());
    CHECK_FALSE(bipartite_divisor_test(DivisorSet::create(5, {1})).has_value());
}

TEST_CASE("three bipartiteness tests agree on connected integral graphs") {
    for (int64 n = 2; n <= 36; ++n)
        for (const DivisorSet& D : enumerate_integral(n)) {
            const CirculantGraph G = from_divisor_set(D);
            const bool by_bfs = is_bipartite_bfs(G);
            const bool by_spectrum = is_bipartite_spectral(eigenvalues_exact(D), D.degree());
            const bool by_divisors = bipartite_divisor_test(D).has_value();
            REQUIRE(by_bfs == by_spectrum);
            REQUIRE(by_bfs == by_divisors);
        }
}
