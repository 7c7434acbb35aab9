#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ekr/ekr_search.hpp"
#include "ekr/kneser.hpp"

namespace ekr {

enum class TrialMode { Exact, NearStarOnly };

// One batch of independent trials at a fixed edge probability. Trial t runs
// on the sub-seed trial_seed(seed, t), so results are reproducible per trial
// and independent of execution order.
struct TrialPlan {
    KneserParams params;
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    SearchBudget budget;
    TrialMode mode = TrialMode::Exact;
};

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

// 95% Wilson score interval.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct PrEstimate {
    double fraction = 0.0;  // EKR verdicts / trials
    WilsonInterval ci;
    std::uint64_t ekr_trials = 0;
    std::uint64_t violation_trials = 0;
    std::uint64_t inconclusive_trials = 0;
    std::uint64_t trials = 0;

    bool conclusive() const { return inconclusive_trials == 0; }
};

// Monte Carlo estimate of Pr(the sampled subgraph has the EKR property).
// Deterministic in (seed, trials); trials run in parallel, the reduction is a
// commutative count. At p = 0 and p = 1 every trial is the same graph, so the
// fraction is exactly 0.0 or 1.0 resp. by a single evaluation.
PrEstimate estimate_pr_ekr(const TrialPlan& plan);

struct ThresholdEstimate {
    double p_hat = 0.0;
    double p_lo = 0.0;
    double p_hi = 1.0;
    PrEstimate at_p_hat;
    std::uint64_t trials_used = 0;
    double p_zero_reference = 0.0;
    TrialMode mode = TrialMode::Exact;
};

// Bisection for the p with empirical Pr(EKR) = 1/2, reusing the same master
// seed at every probe. The coupled oracles make each trial's EKR indicator
// monotone in p, so the empirical fraction is monotone and bisection is
// well-founded. Throws ResourceError if a probe has inconclusive trials.
ThresholdEstimate estimate_pc(const KneserParams& params, std::uint64_t trials,
                              double tolerance, std::uint64_t seed,
                              TrialMode mode = TrialMode::Exact,
                              const SearchBudget& budget = {});

// Fraction of trials in which the near-star scan finds a violation: a lower
// bound estimate for 1 - Pr(EKR).
double near_star_rate(const KneserParams& params, double p, std::uint64_t trials,
                      std::uint64_t seed);

struct TrendRow {
    int k = 0;
    int n = 0;
    TrialMode mode = TrialMode::Exact;
    ThresholdEstimate estimate;
    double p_zero_reference = 0.75;
};

// Threshold estimates along the n = 2k+1 diagonal: exact mode while the
// checker is exhaustive (n <= 7), the near-star proxy beyond. An exhibit, not
// a verification.
std::vector<TrendRow> pc_trend_report(const std::vector<int>& k_values,
                                      std::uint64_t trials, double tolerance,
                                      std::uint64_t seed);

std::string to_string(TrialMode mode);

}  // namespace ekr
