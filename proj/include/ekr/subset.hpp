#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ekr {

// A k-subset of a ground set {1,...,n}, n <= 64, as one machine word.
// Element i lives in bit i-1. Immutable value type; popcount is cached.
//
// For equal-size subsets, numeric order of the words IS colex order (the
// highest differing bit decides both), so comparisons below are colex.
class KSubset {
  public:
    static constexpr int kMaxGround = 64;

    constexpr KSubset() = default;

    // From explicit 1-based elements, e.g. KSubset::of({1,4,5}).
    static KSubset of(std::initializer_list<int> elems);
    static KSubset of(const std::vector<int>& elems);
    static KSubset from_bits(std::uint64_t bits);

    std::uint64_t bits() const { return bits_; }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(int element) const {
        return element >= 1 && element <= kMaxGround &&
               (bits_ >> (element - 1)) & 1u;
    }

    // Smallest / largest element; 0 when empty.
    int min_element() const;
    int max_element() const;

    std::vector<int> elements() const;  // ascending

    KSubset with(int element) const;
    KSubset without(int element) const;

    friend bool operator==(const KSubset&, const KSubset&) = default;
    friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) {
        return a.bits_ <=> b.bits_;
    }

  private:
    std::uint64_t bits_ = 0;
    int size_ = 0;
};

KSubset set_union(const KSubset& a, const KSubset& b);
KSubset set_intersection(const KSubset& a, const KSubset& b);

// True when A is contained in B.
inline bool is_subset(const KSubset& a, const KSubset& b) {
    return (a.bits() & ~b.bits()) == 0;
}

// Complement within {1,...,n}.
KSubset complement_in(const KSubset& s, int n);

// Order-preserving relabel of S over [n] \ {x} onto {1,...,n-1}:
// elements below x keep their label, elements above x shift down by one.
// Requires x not in S.
KSubset relabel_excluding(const KSubset& s, int x);

// Half the symmetric difference |A ^ B| / 2 for equal-size sets (the Johnson
// adjacency class index). Throws ContractViolation on unequal sizes.
int sym_diff_half(const KSubset& a, const KSubset& b);

// Colex rank: sum of C(s_i - 1, i) over the ascending elements s_1 < ... < s_k.
// The empty set ranks 0. Bijection onto 0..C(n,k)-1 for fixed k.
std::uint64_t colex_rank(const KSubset& s);

// Inverse of colex_rank for subsets of size k. Throws RangeError when the
// rank needs elements above the 64-position width.
KSubset colex_unrank(std::uint64_t rank, int k);

// Visit all C(n,k) k-subsets of {1,...,n} in colex order.
void for_each_k_subset(int n, int k, const std::function<void(const KSubset&)>& fn);

// Materialized colex enumeration; position == colex_rank. Empty for k > n.
// Throws ResourceError beyond desk scale (2^24 subsets).
std::vector<KSubset> enumerate_k_subsets(int n, int k);

}  // namespace ekr
