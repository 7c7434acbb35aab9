#pragma once

#include <cstdint>
#include <vector>

#include "ekr/kneser.hpp"
#include "ekr/rng.hpp"
#include "ekr/subset.hpp"

namespace ekr {

// Storage-free random model of the p-subgraph: each Kneser edge carries a
// fixed uniform u = hash(seed, rank pair) in [0,1) and is present iff u < p.
// The same (seed, pair) gives the same u for every p, so the subgraphs are
// coupled monotonically across p.
class EdgeOracle {
  public:
    EdgeOracle(KneserParams params, double p, std::uint64_t seed);

    const KneserParams& params() const { return params_; }
    double p() const { return p_; }
    std::uint64_t seed() const { return seed_; }

    // The p-independent uniform attached to an unordered vertex pair.
    double pair_uniform(const KSubset& a, const KSubset& b) const;

    // Presence of the sampled edge; requires a Kneser edge (disjoint sets).
    bool edge_present(const KSubset& a, const KSubset& b) const;

  private:
    KneserParams params_;
    double p_;
    std::uint64_t seed_;
};

// Materialized spanning subgraph of the Kneser graph, vertices indexed by
// colex rank. Small enough to hold as adjacency bitsets at desk scale.
class SampledGraph {
  public:
    static constexpr std::size_t kMaxVertices = 512;

    // Query the oracle once per Kneser edge.
    static SampledGraph from_oracle(const EdgeOracle& oracle);
    // The full Kneser graph (p = 1).
    static SampledGraph full(const KneserParams& params);
    // Edgeless graph (p = 0).
    static SampledGraph empty(const KneserParams& params);

    const KneserParams& params() const { return params_; }
    std::size_t vertex_count() const { return subsets_.size(); }
    const KSubset& subset_of(std::size_t v) const { return subsets_[v]; }
    const std::vector<KSubset>& subsets() const { return subsets_; }

    bool edge(std::size_t u, std::size_t v) const;
    bool edge(const KSubset& a, const KSubset& b) const;
    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    // Adjacency row as packed words (kMaxVertices bits).
    const std::uint64_t* row(std::size_t v) const { return adj_[v].data(); }
    std::size_t words() const { return words_; }

    std::uint64_t edge_total() const;

  private:
    explicit SampledGraph(const KneserParams& params);

    KneserParams params_;
    std::vector<KSubset> subsets_;                 // colex order
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> adj_;  // bit v set in row u iff edge
};

}  // namespace ekr
