#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ekr/kneser.hpp"
#include "ekr/oracle.hpp"

namespace ekr {

// Deterministic search limit: branch nodes, not wall clock, so Monte Carlo
// trials reproduce bit-for-bit regardless of machine speed.
struct SearchBudget {
    std::uint64_t max_nodes = 20'000'000;
};

enum class EkrStatus { Ekr, Violation };
enum class SearchMethod { ExhaustiveSearch, NearStarOnly, TimedOut };

// Outcome of an EKR check. A Violation always carries a witness: either a
// star-sized independent family that is not a star, or a larger independent
// family. TimedOut means the budget ran out before the search space was
// exhausted; the caller must treat the verdict as inconclusive.
struct EkrVerdict {
    EkrStatus status = EkrStatus::Ekr;
    SearchMethod method = SearchMethod::ExhaustiveSearch;
    std::optional<Family> witness;
    std::uint64_t nodes = 0;

    bool conclusive() const {
        return status == EkrStatus::Violation || method == SearchMethod::ExhaustiveSearch;
    }
};

// Exhaustive decision of the EKR property on a sampled subgraph: EKR iff no
// star-sized non-star family is independent (equivalently, iff no independent
// set larger than a star exists and star-sized independent sets are stars).
// Branch-and-bound over the adjacency bitsets; star-shaped leaves are passed
// over, greedy clique covers prune the tree.
EkrVerdict is_ekr(const SampledGraph& graph, const SearchBudget& budget = {});
EkrVerdict is_ekr(const EdgeOracle& oracle, const SearchBudget& budget = {});

// All families one swap away from a star: (star at x minus one member) plus
// one outside set. Returns the candidates that are independent in the sampled
// graph, deduplicated; every hit certifies an EKR violation.
struct NearStarScan {
    std::vector<Family> violations;
    std::uint64_t candidates = 0;  // (x, dropped, added) triples inspected
};

NearStarScan near_star_scan(const SampledGraph& graph);
NearStarScan near_star_scan(const EdgeOracle& oracle);

// Scan-only verdict: Violation is conclusive, Ekr only says the scan found
// nothing (method NearStarOnly marks it as such).
EkrVerdict near_star_verdict(const SampledGraph& graph);

}  // namespace ekr
