#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ekr/exact.hpp"
#include "ekr/subset.hpp"

namespace ekr {

// Derived constants of the Kneser graph on k-subsets of {1,...,n}.
struct KneserParams {
    int n = 0;                      // ground-set size
    int k = 0;                      // subset size
    int c = 0;                      // n - 2k  (>= 1 in the EKR regime)
    int m = 0;                      // n - 1
    ExactInt star_size;             // C(n-1,k-1): size of a star, the EKR bound
    ExactInt star_complement_size;  // C(n-1,k): k-sets avoiding a fixed element
    ExactInt vertex_count;          // C(n,k)
    double p_zero = 0.0;            // reference threshold: 3/4 when n = 2k+1,
                                    // else ln(n*C(n-1,k)) / C(n-k-1,k-1)
};

// Validates 0 < k < n/2, n <= 64 and fills every derived field.
KneserParams make_params(int n, int k);

// Kneser adjacency: two k-sets are joined iff they are disjoint.
inline bool is_disjoint(const KSubset& a, const KSubset& b) {
    return (a.bits() & b.bits()) == 0;
}

// A family of k-subsets with the statistics every bound needs: the degree
// vector, its maximum, the defect a = star_size - max_degree, the number of
// internal Kneser edges, and whether the family is exactly a star.
class Family {
  public:
    Family() = default;

    const std::vector<KSubset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(const KSubset& s) const;

    // Degree of element x: how many members contain x.
    int degree(int x) const { return degree_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& degree_vector() const { return degree_; }
    int max_degree() const { return max_degree_; }
    const std::vector<int>& apex_set() const { return apexes_; }

    std::uint64_t internal_edges() const { return internal_edges_; }

    // The element x with family == all k-sets containing x, when it exists.
    std::optional<int> star_witness() const { return star_witness_; }
    bool is_star() const { return star_witness_.has_value(); }

    // a = star_size - max_degree; defined for families of star size only.
    ExactInt star_defect() const;

    // Member of the violator class: star-sized but not a star.
    bool is_potential_violator() const;

    friend Family family_stats(std::vector<KSubset> members, const KneserParams& params);

  private:
    std::vector<KSubset> members_;  // sorted by colex order, deduplicated
    std::vector<int> degree_;       // index 0 unused
    int max_degree_ = 0;
    std::vector<int> apexes_;
    std::uint64_t internal_edges_ = 0;
    std::optional<int> star_witness_;
    ExactInt star_size_;
    int n_ = 0;
};

// Exhaustive pair-scan statistics for a family over the given parameters.
// Throws ContractViolation if any member has the wrong size or exceeds n.
Family family_stats(std::vector<KSubset> members, const KneserParams& params);

// All k-sets containing x, sorted by colex order.
std::vector<KSubset> star_family(const KneserParams& params, int x);

// The apex split of a star-sized family at a maximum-degree element x:
//   first  = members missing x           (the "moved" sets, labels kept),
//   second = complements within [n] of the star members the family dropped.
// Both sides live in [n] \ {x} and have size star_defect. Throws
// ContractViolation unless |F| == star_size and x attains the max degree.
std::pair<std::vector<KSubset>, std::vector<KSubset>>
split_at_apex(const Family& family, int x, const KneserParams& params);

}  // namespace ekr
