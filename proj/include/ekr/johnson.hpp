#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ekr/exact.hpp"
#include "ekr/subset.hpp"

namespace ekr {

// The distance-i graph of the Johnson scheme on k-subsets of {1,...,m}:
// A ~ B iff |A symdiff B| = 2i. Regular of degree C(k,i)*C(m-k,i).
struct JohnsonGraph {
    int m = 0;
    int k = 0;
    int i = 0;
    ExactInt degree;
};

JohnsonGraph make_johnson(int m, int k, int i);

ExactInt johnson_degree(int m, int k, int i);

// S^j_i = C(j,i) C(k-j,c-i) C(m-k-j,c-i), the summand of the eigenvalue
// formula; zero whenever a top argument is negative.
ExactInt eigenvalue_summand(int m, int k, int c, int j, int i);

// Adjacency eigenvalue lambda_j = sum_{i=0..c} (-1)^i S^j_i of the distance-c
// graph, for 0 <= j <= k <= m/2 and 1 <= c <= k. Exact integer.
ExactInt adjacency_eigenvalue(int m, int k, int c, int j);

// Eigenspace dimension C(m,j) - C(m,j-1) (standard for k <= m/2).
ExactInt eigenvalue_multiplicity(int m, int j);

// Laplacian spectral-gap formula (m/k) C(k,c) C(m-k-1,c-1), exact rational.
// The value is proven to be the gap only when k > 6c; `proven_regime` flags it.
struct GapFormula {
    Rational value;
    bool proven_regime = false;
};
GapFormula laplacian_gap_formula(int m, int k, int c);

// Dense budget for the numeric eigensolver.
inline constexpr std::uint64_t kDenseBudget = 300;

// Full numeric spectrum of the distance-c graph via the in-house Jacobi
// solver; ascending, size C(m,k). Throws ResourceError over the budget.
std::vector<double> dense_spectrum_oracle(int m, int k, int c);

// D - (second largest adjacency eigenvalue), computed numerically.
double laplacian_gap_numeric(int m, int k, int c);

// Visit the distance-i neighbors of a k-subset of {1,...,m}.
void for_each_johnson_neighbor(const KSubset& s, int m, int i,
                               const std::function<void(const KSubset&)>& fn);

// Exact edge-boundary count of A inside the distance-i graph.
ExactInt edge_boundary(int m, int k, int i, const std::vector<KSubset>& a);

// One row of the eigenvalue-vs-oracle comparison.
struct SpectrumReport {
    int m = 0, k = 0, c = 0;
    std::vector<ExactInt> formula_eigenvalues;        // lambda_j, j = 0..k
    std::vector<ExactInt> multiplicities;             // per j
    std::vector<std::vector<ExactInt>> s_table;       // s_table[j][i] = S^j_i
    std::vector<double> numeric_eigenvalues;          // ascending
    GapFormula gap_formula;
    double gap_numeric = 0.0;
    std::vector<double> residuals;                    // per j, matched multiset
    double max_residual = 0.0;
};
SpectrumReport spectrum_report(int m, int k, int c);

// Alon-Milman check: edge boundary in the distance-c graph vs
// gap * |A| * (1 - mu). Uses the formula gap in the proven regime, otherwise
// the numeric gap (dense budget applies).
struct MarginReport {
    double lhs = 0.0;   // beta_c(A)
    double rhs = 0.0;   // gap * |A| * (1 - mu)
    double margin = 0.0;
    double gap_used = 0.0;
    bool formula_gap = false;
};
MarginReport check_alon_milman(int m, int k, int c, const std::vector<KSubset>& a);
MarginReport check_alon_milman(int m, int k, int c, const std::vector<KSubset>& a,
                               double gap);

// Empirical ratio beta_1(A) / (m |A| log(1/mu)): the log-Sobolev constant
// this particular A attains. Undefined for empty or full A.
double log_sobolev_ratio(int m, int k, const std::vector<KSubset>& a);

// Smallest Alon-Milman margin over `trials` random subsets of the level.
double min_alon_milman_margin(int m, int k, int c, std::uint64_t trials,
                              std::uint64_t seed);

// Smallest log-Sobolev ratio over a battery of sets on the given levels:
// all singletons, all element cuts, and random subsets. The result calibrates
// the configurable gamma.
double calibrate_gamma(const std::vector<std::pair<int, int>>& levels,
                       std::uint64_t random_trials, std::uint64_t seed);

}  // namespace ekr
