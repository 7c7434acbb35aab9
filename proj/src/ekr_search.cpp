#include "ekr/ekr_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

#include "ekr/errors.hpp"

namespace ekr {

namespace {

constexpr std::size_t kWords = SampledGraph::kMaxVertices / 64;

using Bits = std::array<std::uint64_t, kWords>;

inline std::size_t count(const Bits& b, std::size_t nw) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < nw; ++i) c += static_cast<std::size_t>(std::popcount(b[i]));
    return c;
}

inline bool test(const Bits& b, std::size_t v) {
    return (b[v / 64] >> (v % 64)) & 1u;
}

inline void set_bit(Bits& b, std::size_t v) { b[v / 64] |= std::uint64_t{1} << (v % 64); }
inline void clear_bit(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

inline int find_first(const Bits& b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        if (b[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(b[i])));
    return -1;
}

inline std::size_t degree_in(const SampledGraph& g, std::size_t v, const Bits& cand) {
    const std::uint64_t* row = g.row(v);
    std::size_t c = 0;
    for (std::size_t i = 0; i < g.words(); ++i)
        c += static_cast<std::size_t>(std::popcount(row[i] & cand[i]));
    return c;
}

// Greedy clique cover of the candidate set: an upper bound on the size of any
// independent subset (one vertex per clique).
std::size_t clique_cover_bound(const SampledGraph& g, Bits work, std::size_t nw) {
    std::size_t cliques = 0;
    for (;;) {
        int u = find_first(work, nw);
        if (u < 0) break;
        clear_bit(work, static_cast<std::size_t>(u));
        Bits common;  // candidates adjacent to everything taken so far
        const std::uint64_t* row_u = g.row(static_cast<std::size_t>(u));
        for (std::size_t i = 0; i < nw; ++i) common[i] = work[i] & row_u[i];
        for (;;) {
            int w = find_first(common, nw);
            if (w < 0) break;
            clear_bit(work, static_cast<std::size_t>(w));
            const std::uint64_t* row_w = g.row(static_cast<std::size_t>(w));
            for (std::size_t i = 0; i < nw; ++i) common[i] &= work[i] & row_w[i];
        }
        ++cliques;
    }
    return cliques;
}

class Searcher {
  public:
    Searcher(const SampledGraph& g, std::uint64_t target, std::uint64_t max_nodes)
        : g_(g), nw_(g.words()), target_(target), max_nodes_(max_nodes) {}

    // True when a witness was found; timed_out() reports budget exhaustion.
    bool run() {
        Bits cand{};
        for (std::size_t v = 0; v < g_.vertex_count(); ++v) set_bit(cand, v);
        return step(cand, ~std::uint64_t{0}, 0);
    }

    bool timed_out() const { return timed_out_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<std::size_t>& witness() const { return chosen_; }

  private:
    // chosen_ holds the current independent set; `common` is the AND of the
    // members' element masks (nonzero iff they all share an element).
    bool step(Bits cand, std::uint64_t common, std::uint64_t size) {
        std::size_t pushed_here = 0;
        const auto fail = [&]() -> bool {
            chosen_.resize(chosen_.size() - pushed_here);
            return false;
        };

        if (++nodes_ > max_nodes_) {
            timed_out_ = true;
            return false;
        }
        if (size == target_) {
            if (common == 0) return true;  // star-sized, no shared element
            // A star; any remaining candidate extends it past the EKR bound.
            int v = find_first(cand, nw_);
            if (v >= 0) {
                chosen_.push_back(static_cast<std::size_t>(v));
                return true;
            }
            return false;  // maximal star leaf; keep searching elsewhere
        }
        std::size_t ccount = count(cand, nw_);
        if (size + ccount < target_) return false;

        // Candidate degrees: pick the branching vertex, fold in forced picks.
        for (;;) {
            int best = -1;
            std::size_t best_deg = 0;
            bool any_isolated = false;
            Bits isolated{};
            for (std::size_t i = 0; i < nw_; ++i) {
                std::uint64_t w = cand[i];
                while (w) {
                    const std::size_t v = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
                    w &= w - 1;
                    const std::size_t d = degree_in(g_, v, cand);
                    if (d == 0) {
                        set_bit(isolated, v);
                        any_isolated = true;
                    } else if (best < 0 || d > best_deg) {
                        best = static_cast<int>(v);
                        best_deg = d;
                    }
                }
            }

            if (best < 0) {
                // Everything left is pairwise non-adjacent: chosen + cand is
                // independent. Decide directly.
                if (settle_flat(cand, common, size, ccount)) return true;
                return fail();
            }

            if (any_isolated) {
                // Isolated candidates can always be taken: doing so never
                // loses a violation (any completion stays independent, and a
                // surplus member past the star bound is itself a violation).
                for (std::size_t i = 0; i < nw_; ++i) {
                    std::uint64_t w = isolated[i];
                    cand[i] &= ~isolated[i];
                    while (w) {
                        const std::size_t v = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
                        w &= w - 1;
                        chosen_.push_back(v);
                        ++pushed_here;
                        common &= g_.subset_of(v).bits();
                        ++size;
                        --ccount;
                    }
                }
                if (size >= target_) {
                    if (size > target_) return true;  // larger than any star
                    if (common == 0) return true;
                    int v = find_first(cand, nw_);
                    if (v >= 0) {
                        chosen_.push_back(static_cast<std::size_t>(v));
                        return true;
                    }
                    return fail();
                }
                if (size + ccount < target_) return fail();
                continue;  // re-evaluate degrees after the forced picks
            }

            // Prune on the clique-cover bound.
            if (size + clique_cover_bound(g_, cand, nw_) < target_) return fail();

            const auto v = static_cast<std::size_t>(best);
            // Include v.
            Bits inc;
            const std::uint64_t* row = g_.row(v);
            for (std::size_t i = 0; i < nw_; ++i) inc[i] = cand[i] & ~row[i];
            clear_bit(inc, v);
            chosen_.push_back(v);
            if (step(inc, common & g_.subset_of(v).bits(), size + 1)) return true;
            chosen_.pop_back();
            if (timed_out_) return fail();
            // Exclude v.
            clear_bit(cand, v);
            --ccount;
            if (size + ccount < target_) return fail();
        }
    }

    // chosen + cand pairwise independent; no further branching possible.
    bool settle_flat(const Bits& cand, std::uint64_t common, std::uint64_t size,
                     std::size_t ccount) {
        if (size + ccount < target_) return false;
        std::uint64_t total_common = common;
        std::size_t taken = 0;
        for (std::size_t i = 0; i < nw_; ++i) {
            std::uint64_t w = cand[i];
            while (w) {
                const std::size_t v = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                chosen_.push_back(v);
                total_common &= g_.subset_of(v).bits();
                ++taken;
            }
        }
        if (size + taken > target_) return true;       // exceeds the star bound
        if (total_common == 0) return true;            // star-sized non-star
        for (std::size_t i = 0; i < taken; ++i) chosen_.pop_back();
        return false;                                  // it was exactly a star
    }

    const SampledGraph& g_;
    std::size_t nw_;
    std::uint64_t target_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
    std::vector<std::size_t> chosen_;
};

Family family_from_ranks(const SampledGraph& g, const std::vector<std::size_t>& ranks) {
    std::vector<KSubset> members;
    members.reserve(ranks.size());
    for (std::size_t v : ranks) members.push_back(g.subset_of(v));
    return family_stats(std::move(members), g.params());
}

}  // namespace

EkrVerdict is_ekr(const SampledGraph& graph, const SearchBudget& budget) {
    const KneserParams& p = graph.params();
    EkrVerdict verdict;

    if (p.k == 1) {
        // Stars are singletons; EKR holds iff no two vertices are non-adjacent,
        // i.e. the sampled graph is complete.
        for (std::size_t u = 0; u < graph.vertex_count(); ++u)
            for (std::size_t v = u + 1; v < graph.vertex_count(); ++v)
                if (!graph.edge(u, v)) {
                    verdict.status = EkrStatus::Violation;
                    verdict.witness = family_from_ranks(graph, {u, v});
                    return verdict;
                }
        return verdict;
    }

    // Cheap certificate first: most violations near the threshold are one
    // swap from a star.
    NearStarScan scan = near_star_scan(graph);
    if (!scan.violations.empty()) {
        verdict.status = EkrStatus::Violation;
        verdict.witness = scan.violations.front();
        return verdict;
    }

    Searcher searcher(graph, p.star_size.get_ui(), budget.max_nodes);
    const bool found = searcher.run();
    verdict.nodes = searcher.nodes();
    if (found) {
        verdict.status = EkrStatus::Violation;
        verdict.witness = family_from_ranks(graph, searcher.witness());
    } else if (searcher.timed_out()) {
        verdict.method = SearchMethod::TimedOut;
    }
    return verdict;
}

EkrVerdict is_ekr(const EdgeOracle& oracle, const SearchBudget& budget) {
    return is_ekr(SampledGraph::from_oracle(oracle), budget);
}

NearStarScan near_star_scan(const SampledGraph& graph) {
    const KneserParams& p = graph.params();
    NearStarScan out;
    std::set<std::vector<std::uint64_t>> seen;

    std::vector<std::size_t> star_ranks;
    for (int x = 1; x <= p.n; ++x) {
        star_ranks.clear();
        for (std::size_t v = 0; v < graph.vertex_count(); ++v)
            if (graph.subset_of(v).contains(x)) star_ranks.push_back(v);

        for (std::size_t dropped : star_ranks) {
            for (std::size_t added = 0; added < graph.vertex_count(); ++added) {
                if (graph.subset_of(added).contains(x)) continue;
                ++out.candidates;
                bool independent = true;
                for (std::size_t t : star_ranks) {
                    if (t == dropped) continue;
                    if (is_disjoint(graph.subset_of(added), graph.subset_of(t)) &&
                        graph.edge(added, t)) {
                        independent = false;
                        break;
                    }
                }
                if (!independent) continue;

                std::vector<std::size_t> ranks;
                ranks.reserve(star_ranks.size());
                for (std::size_t t : star_ranks)
                    if (t != dropped) ranks.push_back(t);
                ranks.push_back(added);
                std::sort(ranks.begin(), ranks.end());
                std::vector<std::uint64_t> key(ranks.begin(), ranks.end());
                if (!seen.insert(key).second) continue;

                Family fam = family_from_ranks(graph, ranks);
                if (fam.is_star()) continue;  // degenerate (k = 1)
                out.violations.push_back(std::move(fam));
            }
        }
    }
    return out;
}

NearStarScan near_star_scan(const EdgeOracle& oracle) {
    return near_star_scan(SampledGraph::from_oracle(oracle));
}

EkrVerdict near_star_verdict(const SampledGraph& graph) {
    EkrVerdict verdict;
    verdict.method = SearchMethod::NearStarOnly;
    NearStarScan scan = near_star_scan(graph);
    if (!scan.violations.empty()) {
        verdict.status = EkrStatus::Violation;
        verdict.witness = std::move(scan.violations.front());
    }
    return verdict;
}

}  // namespace ekr
