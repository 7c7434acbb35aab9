#include "ekr/oracle.hpp"

#include <algorithm>
#include <bit>

#include "ekr/errors.hpp"

namespace ekr {

EdgeOracle::EdgeOracle(KneserParams params, double p, std::uint64_t seed)
    : params_(std::move(params)), p_(p), seed_(seed) {
    if (p < 0.0 || p > 1.0) throw DomainError("EdgeOracle: p outside [0,1]");
}

double EdgeOracle::pair_uniform(const KSubset& a, const KSubset& b) const {
    const std::uint64_t ra = colex_rank(a);
    const std::uint64_t rb = colex_rank(b);
    return unit_interval(hash3(seed_, std::min(ra, rb), std::max(ra, rb)));
}

bool EdgeOracle::edge_present(const KSubset& a, const KSubset& b) const {
    if (!is_disjoint(a, b))
        throw ContractViolation("edge_present: pair is not a Kneser edge");
    return pair_uniform(a, b) < p_;
}

SampledGraph::SampledGraph(const KneserParams& params) : params_(params) {
    subsets_ = enumerate_k_subsets(params.n, params.k);
    if (subsets_.size() > kMaxVertices)
        throw ResourceError("SampledGraph: vertex count exceeds search capacity");
    words_ = (subsets_.size() + 63) / 64;
    adj_.assign(subsets_.size(), std::vector<std::uint64_t>(words_, 0));
}

SampledGraph SampledGraph::from_oracle(const EdgeOracle& oracle) {
    SampledGraph g(oracle.params());
    for (std::size_t u = 0; u < g.subsets_.size(); ++u)
        for (std::size_t v = u + 1; v < g.subsets_.size(); ++v)
            if (is_disjoint(g.subsets_[u], g.subsets_[v]) &&
                oracle.edge_present(g.subsets_[u], g.subsets_[v]))
                g.add_edge(u, v);
    return g;
}

SampledGraph SampledGraph::full(const KneserParams& params) {
    SampledGraph g(params);
    for (std::size_t u = 0; u < g.subsets_.size(); ++u)
        for (std::size_t v = u + 1; v < g.subsets_.size(); ++v)
            if (is_disjoint(g.subsets_[u], g.subsets_[v])) g.add_edge(u, v);
    return g;
}

SampledGraph SampledGraph::empty(const KneserParams& params) {
    return SampledGraph(params);
}

bool SampledGraph::edge(std::size_t u, std::size_t v) const {
    return (adj_[u][v / 64] >> (v % 64)) & 1u;
}

bool SampledGraph::edge(const KSubset& a, const KSubset& b) const {
    return edge(static_cast<std::size_t>(colex_rank(a)),
                static_cast<std::size_t>(colex_rank(b)));
}

void SampledGraph::add_edge(std::size_t u, std::size_t v) {
    adj_[u][v / 64] |= std::uint64_t{1} << (v % 64);
    adj_[v][u / 64] |= std::uint64_t{1} << (u % 64);
}

void SampledGraph::remove_edge(std::size_t u, std::size_t v) {
    adj_[u][v / 64] &= ~(std::uint64_t{1} << (v % 64));
    adj_[v][u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::uint64_t SampledGraph::edge_total() const {
    std::uint64_t deg = 0;
    for (const auto& row : adj_)
        for (std::uint64_t w : row) deg += static_cast<std::uint64_t>(std::popcount(w));
    return deg / 2;
}

}  // namespace ekr
