#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ekr/exact.hpp"
#include "ekr/kneser.hpp"
#include "ekr/rng.hpp"
#include "ekr/subset.hpp"

namespace ekr {

// Constants of the inequality chain. theta and gamma are the two genuinely
// unknown ones: theta is the edge lower-bound constant the whole union bound
// rides on, gamma the log-Sobolev constant, treated as a config value
// calibrated against the smallest empirically observed log-Sobolev ratio.
struct BoundConfig {
    double theta = 0.05;
    double gamma = 0.45;    // see calibrate_gamma; default sits under the
                            // battery minimum for levels up to m = 10
    double epsilon = 0.01;  // edge-probability margin used when c = 1
    double big_c = 100.0;   // multiplier on p_zero used when c >= 2
    double big_k = 1.0;     // Das-Tran constant (>= 1)
    std::optional<double> zeta;  // Das-Tran zeta; default = precondition max

    // Exponent weight of the union bound: log(1/epsilon) when c = 1, else p.
    double xi(const KneserParams& params, double p) const;

    // zeta, defaulting to its precondition ceiling c / ((10K)^2 n).
    double effective_zeta(const KneserParams& params) const;
};

// Everything the per-family bounds need, after splitting a star-sized family
// at an apex and moving to the (n-1)-element ground set: the displaced
// members (level k), the complements of the dropped star members (level k+c),
// both relabeled onto {1,...,m}, plus the family's edge count.
struct ApexContext {
    KneserParams params;
    int apex = 0;
    std::vector<KSubset> side_a;       // level k, sorted
    std::vector<KSubset> side_b;       // level k+c, sorted
    ExactInt defect;                   // |A| = |B| = a
    Rational mu;                       // |A| / C(m,k), exact
    std::uint64_t family_edges = 0;    // e(F)
};

ApexContext make_apex_context(const Family& family, int apex, const KneserParams& params);

// Containment pairs |{(A,B) in S x T : A subset of B}| between a level-k and
// a level-(k+c) family over the same ground set.
ExactInt lambda_count(const std::vector<KSubset>& s, const std::vector<KSubset>& t);

// L(A, ~B): containment pairs from side A into the complement of side B
// within its level. This is the quantity the proposition bounds from below.
ExactInt lambda_into_b_complement(const ApexContext& ctx);

// Identity residuals; each must be exactly zero.
//   mo1:  L(~A, B) - L(A, ~B) - C(k+c-1,c-1)|A|
//   gle:  e(F) - L(A, ~B) - e(A)
//   mo2:  Phi - beta_1(A) C(k+c-2,c-1), with Phi the direct triple count
// mo2 requires the ambient relation m = 2k + c - 1.
ExactInt verify_mo1(const ApexContext& ctx);
ExactInt verify_gle(const ApexContext& ctx);
ExactInt verify_mo2(int m, int k, int c, const std::vector<KSubset>& a);

// Right-hand side of the containment-pair proposition:
//   max{ beta_c(A)/(2 C(k,c)), C(k+c-2,c-1) beta_1(A)/(2ck) } - C(k+c-1,c-1)|A|/2.
// Exact rational; L(A, ~B) must dominate it. Requires a nonempty side A.
Rational betaprop_bound(const ApexContext& ctx);

// The two scaled max-arguments of the combined edge lower bound
//   e(F) >= (|A|/2) C(k+c-2,c-1) max{ 1 - (m/k)mu, (gamma m/(ck)) log(1/mu) - (k+c-1)/k }.
// term1 is theorem-backed and exact; term2 rides on the configured gamma.
struct Mainobs2 {
    Rational term1;
    double term2 = 0.0;
};
Mainobs2 mainobs2_bound(const ApexContext& ctx, const BoundConfig& cfg);

// Largest theta for which the per-family edge lower bound
//   e(F) > theta k^{-1} C(n-k-1,k-1) a log(N/a)
// holds at F; the scan minimum over the violator class is the empirical
// constant. Requires a star-sized non-star family.
double lemma_ml_ratio(const Family& family, const KneserParams& params);

struct ThetaScan {
    double theta_star = 0.0;
    Family argmin;
    std::uint64_t families = 0;      // violator families inspected
    std::uint64_t min_edges = 0;     // smallest e(F) seen
    bool exhaustive = false;
};

// Minimum of lemma_ml_ratio over every star-sized non-star family. Throws
// ResourceError when the class is too large to enumerate.
ThetaScan exhaustive_theta(const KneserParams& params);

// Sampled fallback: uniform star-sized non-star families plus every family
// one swap away from a star.
ThetaScan sampled_theta(const KneserParams& params, std::uint64_t samples,
                        std::uint64_t seed);

// Das-Tran evaluable bound: applicable when zeta <= c/((10K)^2 n) and
// a > K zeta (n/c) M; then e(F) must exceed zeta M C(n-k-1,k-1).
struct DtBound {
    bool applicable = false;
    double bound = 0.0;
};
DtBound dt_bound(const KneserParams& params, const BoundConfig& cfg, const Family& family);

// The union-bound sum
//   n * sum_{0 < a <= kN/n} C(M,a) C(N,a) exp[-xi theta k^{-1} C(n-k-1,k-1) a log(N/a)]
// evaluated with exact binomials and compensated floating accumulation.
double union_bound_value(const KneserParams& params, double p, const BoundConfig& cfg);

// Case analysis at the target inequality: which branch applies and whether
// the corresponding max-term clears the target right-hand side.
struct TargetReport {
    double lhs = 0.0;          // 2(k+c-1)/(ck) * theta * log(N/a)
    double rhs = 0.0;          // (4/c) * theta * log(1/mu)
    int branch = 0;            // 1: log(1/mu) <= c/gamma, 2: otherwise
    double term1_unit = 0.0;   // 1 - (m/k) mu
    double term2_unit = 0.0;   // (gamma m/(ck)) log(1/mu) - (k+c-1)/k
    double max_term = 0.0;
    bool max_exceeds_rhs = false;
    double branch2_floor = 0.0;  // (gamma/c) log(1/mu), branch 2 only
    bool branch2_ok = true;
};
TargetReport target_comparison(const ApexContext& ctx, const BoundConfig& cfg);

// Uniformly random star-sized non-star family (rejection over stars).
Family random_violator(const KneserParams& params, SplitMix64& rng);

}  // namespace ekr
