#include "ekr/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ekr/errors.hpp"
#include "ekr/oracle.hpp"
#include "ekr/rng.hpp"

namespace ekr {

namespace {

enum class TrialOutcome { Ekr, Violation, Inconclusive };

TrialOutcome run_trial(const TrialPlan& plan, std::uint64_t t) {
    const EdgeOracle oracle(plan.params, plan.p, trial_seed(plan.seed, t));
    const SampledGraph graph = SampledGraph::from_oracle(oracle);
    const EkrVerdict verdict = (plan.mode == TrialMode::NearStarOnly)
                                   ? near_star_verdict(graph)
                                   : is_ekr(graph, plan.budget);
    if (plan.mode == TrialMode::Exact && !verdict.conclusive())
        return TrialOutcome::Inconclusive;
    return verdict.status == EkrStatus::Ekr ? TrialOutcome::Ekr : TrialOutcome::Violation;
}

}  // namespace

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;  // 95%
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

PrEstimate estimate_pr_ekr(const TrialPlan& plan) {
    PrEstimate est;
    est.trials = plan.trials;
    if (plan.trials == 0) return est;

    // Degenerate probabilities give one deterministic graph for every seed.
    if (plan.p == 0.0 || plan.p == 1.0) {
        const TrialOutcome outcome = run_trial(plan, 0);
        switch (outcome) {
            case TrialOutcome::Ekr: est.ekr_trials = plan.trials; break;
            case TrialOutcome::Violation: est.violation_trials = plan.trials; break;
            case TrialOutcome::Inconclusive: est.inconclusive_trials = plan.trials; break;
        }
    } else {
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const auto nthreads =
            static_cast<std::uint64_t>(std::min<std::uint64_t>(hw, plan.trials));
        std::vector<std::uint64_t> ekr(nthreads, 0);
        std::vector<std::uint64_t> violation(nthreads, 0);
        std::vector<std::uint64_t> inconclusive(nthreads, 0);
        std::vector<std::exception_ptr> errors(nthreads);
        std::vector<std::thread> workers;
        workers.reserve(nthreads);
        for (std::uint64_t w = 0; w < nthreads; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::uint64_t t = w; t < plan.trials; t += nthreads) {
                        switch (run_trial(plan, t)) {
                            case TrialOutcome::Ekr: ++ekr[w]; break;
                            case TrialOutcome::Violation: ++violation[w]; break;
                            case TrialOutcome::Inconclusive: ++inconclusive[w]; break;
                        }
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : workers) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (std::uint64_t w = 0; w < nthreads; ++w) {
            est.ekr_trials += ekr[w];
            est.violation_trials += violation[w];
            est.inconclusive_trials += inconclusive[w];
        }
    }

    est.fraction = static_cast<double>(est.ekr_trials) / static_cast<double>(plan.trials);
    est.ci = wilson_interval(est.ekr_trials, plan.trials);
    return est;
}

ThresholdEstimate estimate_pc(const KneserParams& params, std::uint64_t trials,
                              double tolerance, std::uint64_t seed, TrialMode mode,
                              const SearchBudget& budget) {
    if (tolerance <= 0.0 || trials == 0)
        throw DomainError("estimate_pc: need positive tolerance and trials");

    TrialPlan plan{params, 0.0, trials, seed, budget, mode};
    ThresholdEstimate out;
    out.mode = mode;
    out.p_zero_reference = params.p_zero;

    const auto probe = [&](double p) {
        plan.p = p;
        const PrEstimate est = estimate_pr_ekr(plan);
        out.trials_used += est.trials;
        if (!est.conclusive())
            throw ResourceError(
                "estimate_pc: inconclusive trials at p = " + std::to_string(p) +
                "; raise the search budget");
        return est;
    };

    double lo = 0.0, hi = 1.0;  // Pr(EKR) is exactly 0 at p=0 and 1 at p=1
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (probe(mid).fraction < 0.5)
            lo = mid;
        else
            hi = mid;
    }
    out.p_lo = lo;
    out.p_hi = hi;
    out.p_hat = 0.5 * (lo + hi);
    out.at_p_hat = probe(out.p_hat);
    return out;
}

double near_star_rate(const KneserParams& params, double p, std::uint64_t trials,
                      std::uint64_t seed) {
    TrialPlan plan{params, p, trials, seed, SearchBudget{}, TrialMode::NearStarOnly};
    const PrEstimate est = estimate_pr_ekr(plan);
    return static_cast<double>(est.violation_trials) / static_cast<double>(est.trials);
}

std::vector<TrendRow> pc_trend_report(const std::vector<int>& k_values,
                                      std::uint64_t trials, double tolerance,
                                      std::uint64_t seed) {
    std::vector<TrendRow> rows;
    for (int k : k_values) {
        TrendRow row;
        row.k = k;
        row.n = 2 * k + 1;
        const KneserParams params = make_params(row.n, k);
        row.mode = (row.n <= 7) ? TrialMode::Exact : TrialMode::NearStarOnly;
        row.estimate = estimate_pc(params, trials, tolerance, seed, row.mode);
        row.p_zero_reference = params.p_zero;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_string(TrialMode mode) {
    return mode == TrialMode::Exact ? "exact" : "near-star-only";
}

}  // namespace ekr
