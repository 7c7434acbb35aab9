#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "ekr/errors.hpp"
#include "ekr/jacobi.hpp"
#include "ekr/johnson.hpp"
#include "ekr/rng.hpp"

using namespace ekr;

TEST_CASE("jacobi on hand-checked matrices") {
    // diag(3,1,2)
    auto eig = jacobi_eigenvalues({3, 0, 0, 0, 1, 0, 0, 0, 2}, 3);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(eig[2] == doctest::Approx(3.0).epsilon(1e-12));

    // [[2,1],[1,2]] -> {1,3}
    eig = jacobi_eigenvalues({2, 1, 1, 2}, 2);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-12));

    // K_4 adjacency -> {-1,-1,-1,3}
    eig = jacobi_eigenvalues({0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0}, 4);
    CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(eig[3] == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("adjacency eigenvalues of the octahedron J_1(4,2)") {
    CHECK(adjacency_eigenvalue(4, 2, 1, 0) == 4);
    CHECK(adjacency_eigenvalue(4, 2, 1, 1) == 0);
    CHECK(adjacency_eigenvalue(4, 2, 1, 2) == -2);
    CHECK_THROWS_AS(adjacency_eigenvalue(4, 2, 1, 3), DomainError);
    CHECK_THROWS_AS(adjacency_eigenvalue(4, 3, 1, 0), DomainError);  // k > m/2
}

TEST_CASE("degree formula and lambda_0") {
    CHECK(adjacency_eigenvalue(8, 3, 2, 0) == 30);  // C(3,2)*C(5,2)
    CHECK(johnson_degree(8, 3, 2) == 30);
    for (int m = 2; m <= 10; ++m)
        for (int k = 1; 2 * k <= m; ++k)
            for (int c = 1; c <= k; ++c)
                CHECK(adjacency_eigenvalue(m, k, c, 0) == johnson_degree(m, k, c));
}

TEST_CASE("johnson graph descriptor and summand table") {
    const JohnsonGraph g = make_johnson(8, 3, 2);
    CHECK(g.degree == 30);
    CHECK(g.m == 8);

    const SpectrumReport rep = spectrum_report(6, 3, 2);
    for (int j = 0; j <= 3; ++j) {
        ExactInt alternating = 0;
        for (int i = 0; i <= 2; ++i) {
            const ExactInt s = rep.s_table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            alternating += (i % 2 == 0) ? s : -s;
        }
        CHECK(alternating == rep.formula_eigenvalues[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("dense spectrum of J_1(4,2) is the octahedron spectrum") {
    const auto spec = dense_spectrum_oracle(4, 2, 1);
    REQUIRE(spec.size() == 6);
    const double expected[] = {-2, -2, 0, 0, 0, 4};
    for (int i = 0; i < 6; ++i)
        CHECK(spec[static_cast<std::size_t>(i)] ==
              doctest::Approx(expected[i]).epsilon(1e-9));
}

TEST_CASE("dense spectrum size and trace") {
    const auto spec = dense_spectrum_oracle(6, 3, 1);
    CHECK(spec.size() == 20);
    const double trace = std::accumulate(spec.begin(), spec.end(), 0.0);
    CHECK(std::abs(trace) < 1e-8);
    CHECK_THROWS_AS(dense_spectrum_oracle(12, 6, 1), ResourceError);
}

TEST_CASE("formula multiset matches the numeric oracle on small levels") {
    for (int m = 2; m <= 8; ++m)
        for (int k = 1; 2 * k <= m; ++k)
            for (int c = 1; c <= k; ++c) {
                const SpectrumReport rep = spectrum_report(m, k, c);
                CHECK(rep.max_residual < 1e-8);
            }
}

TEST_CASE("laplacian gap formula values") {
    CHECK(laplacian_gap_formula(13, 2, 1).value == 13);  // c=1 collapses to m
    CHECK(laplacian_gap_formula(25, 4, 2).value == 750);
    CHECK(!laplacian_gap_formula(25, 4, 2).proven_regime);
    CHECK(laplacian_gap_formula(30, 7, 1).proven_regime);  // k > 6c

    const GapFormula f = laplacian_gap_formula(4, 2, 1);
    CHECK(f.value == 4);
    CHECK(laplacian_gap_numeric(4, 2, 1) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("gap identity lambda_0 - lambda_1 == formula in the proven regime") {
    for (int m = 14; m <= 30; ++m)
        for (int k = 7; 2 * k <= m; ++k)
            for (int c = 1; 6 * c < k; ++c) {
                const ExactInt diff = adjacency_eigenvalue(m, k, c, 0) -
                                      adjacency_eigenvalue(m, k, c, 1);
                const GapFormula f = laplacian_gap_formula(m, k, c);
                CHECK(f.proven_regime);
                CHECK(make_rational(diff, 1) == f.value);
            }
}

TEST_CASE("summands stay below lambda_1 in the proven regime") {
    for (int m = 14; m <= 24; ++m)
        for (int k = 7; 2 * k <= m; ++k)
            for (int c = 1; 6 * c < k; ++c) {
                const ExactInt lambda1 = adjacency_eigenvalue(m, k, c, 1);
                for (int j = 2; j <= k; ++j) {
                    CHECK(adjacency_eigenvalue(m, k, c, j) <= lambda1);
                    for (int i = 0; i <= std::min(j, c); ++i)
                        CHECK(eigenvalue_summand(m, k, c, j, i) <= lambda1);
                }
            }
}

TEST_CASE("edge boundary basics") {
    CHECK(edge_boundary(4, 2, 1, {}) == 0);
    CHECK(edge_boundary(4, 2, 1, enumerate_k_subsets(4, 2)) == 0);  // full level
    CHECK(edge_boundary(4, 2, 1, {KSubset::of({1, 2})}) == 4);      // degree of a vertex
    CHECK_THROWS_AS(edge_boundary(4, 2, 1, {KSubset::of({1, 2, 3})}), ContractViolation);
}

TEST_CASE("edge boundary symmetry and handshake") {
    SplitMix64 rng(3);
    for (auto [m, k, i] : {std::tuple{5, 2, 1}, std::tuple{6, 3, 2}, std::tuple{7, 3, 1}}) {
        const auto level = enumerate_k_subsets(m, k);
        // handshake: sum of degrees = |level| * D_i
        ExactInt boundary_sum = 0;
        for (const auto& s : level) boundary_sum += edge_boundary(m, k, i, {s});
        CHECK(boundary_sum == ExactInt(static_cast<unsigned long>(level.size())) *
                                  johnson_degree(m, k, i));

        for (int trial = 0; trial < 10; ++trial) {
            std::vector<KSubset> a;
            std::vector<KSubset> rest;
            const double density = rng.next_unit();
            for (const auto& s : level)
                (rng.next_unit() < density ? a : rest).push_back(s);
            CHECK(edge_boundary(m, k, i, a) == edge_boundary(m, k, i, rest));
        }
    }
}

TEST_CASE("alon-milman margins") {
    // Singleton in the octahedron: lhs = 4, rhs = 4 * (5/6).
    const MarginReport rep = check_alon_milman(4, 2, 1, {KSubset::of({1, 2})});
    CHECK(rep.lhs == doctest::Approx(4.0));
    CHECK(rep.rhs == doctest::Approx(4.0 * 5.0 / 6.0).epsilon(1e-9));
    CHECK(rep.margin == doctest::Approx(2.0 / 3.0).epsilon(1e-6));

    CHECK(check_alon_milman(4, 2, 1, enumerate_k_subsets(4, 2)).margin ==
          doctest::Approx(0.0));
    CHECK(check_alon_milman(4, 2, 1, {}).margin == doctest::Approx(0.0));

    CHECK(min_alon_milman_margin(4, 2, 1, 200, 9) >= -1e-9);
    CHECK(min_alon_milman_margin(6, 3, 2, 100, 10) >= -1e-9);
}

TEST_CASE("log-Sobolev ratio") {
    const double singleton = log_sobolev_ratio(4, 2, {KSubset::of({1, 2})});
    CHECK(singleton == doctest::Approx(4.0 / (4.0 * std::log(6.0))).epsilon(1e-12));

    // minimum over singletons equals D_1 / (m log C(m,k))
    for (auto [m, k] : {std::pair{5, 2}, std::pair{6, 3}}) {
        const auto level = enumerate_k_subsets(m, k);
        double min_single = 1e300;
        for (const auto& s : level)
            min_single = std::min(min_single, log_sobolev_ratio(m, k, {s}));
        const double expected = to_double(johnson_degree(m, k, 1)) /
                                (m * std::log(to_double(binomial(
                                         static_cast<unsigned>(m),
                                         static_cast<unsigned>(k)))));
        CHECK(min_single == doctest::Approx(expected).epsilon(1e-12));
    }

    // proper nonempty requirement
    CHECK_THROWS_AS(log_sobolev_ratio(4, 2, {}), DomainError);
    CHECK_THROWS_AS(log_sobolev_ratio(4, 2, enumerate_k_subsets(4, 2)), DomainError);

    // near-full set stays positive and finite
    auto almost = enumerate_k_subsets(4, 2);
    almost.pop_back();
    const double r = log_sobolev_ratio(4, 2, almost);
    CHECK(r > 0.0);
    CHECK(std::isfinite(r));
}

TEST_CASE("gamma calibration sits above the configured default") {
    const double battery_min = calibrate_gamma({{4, 2}, {6, 3}, {8, 4}, {10, 5}}, 50, 17);
    CHECK(battery_min > 0.45);  // default gamma in BoundConfig
    // smallest observed so far: the singleton at (10,5)
    const double expected_floor =
        25.0 / (10.0 * std::log(to_double(binomial(10, 5))));
    CHECK(battery_min == doctest::Approx(expected_floor).epsilon(1e-9));
}
