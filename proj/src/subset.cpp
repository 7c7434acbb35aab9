#include "ekr/subset.hpp"

#include <bit>

#include "ekr/errors.hpp"
#include "ekr/exact.hpp"

namespace ekr {

namespace {

void check_element(int e) {
    if (e < 1 || e > KSubset::kMaxGround)
        throw RangeError("KSubset: element outside 1..64");
}

}  // namespace

KSubset KSubset::of(std::initializer_list<int> elems) {
    KSubset s;
    for (int e : elems) s = s.with(e);
    return s;
}

KSubset KSubset::of(const std::vector<int>& elems) {
    KSubset s;
    for (int e : elems) s = s.with(e);
    return s;
}

KSubset KSubset::from_bits(std::uint64_t bits) {
    KSubset s;
    s.bits_ = bits;
    s.size_ = std::popcount(bits);
    return s;
}

int KSubset::min_element() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
}

int KSubset::max_element() const {
    return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
}

std::vector<int> KSubset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    std::uint64_t b = bits_;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

KSubset KSubset::with(int element) const {
    check_element(element);
    return from_bits(bits_ | (std::uint64_t{1} << (element - 1)));
}

KSubset KSubset::without(int element) const {
    check_element(element);
    return from_bits(bits_ & ~(std::uint64_t{1} << (element - 1)));
}

KSubset set_union(const KSubset& a, const KSubset& b) {
    return KSubset::from_bits(a.bits() | b.bits());
}

KSubset set_intersection(const KSubset& a, const KSubset& b) {
    return KSubset::from_bits(a.bits() & b.bits());
}

KSubset complement_in(const KSubset& s, int n) {
    if (n < 1 || n > KSubset::kMaxGround) throw RangeError("complement_in: bad n");
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << n) - 1);
    if (s.bits() & ~full)
        throw ContractViolation("complement_in: set has elements above n");
    return KSubset::from_bits(full & ~s.bits());
}

KSubset relabel_excluding(const KSubset& s, int x) {
    check_element(x);
    if (s.contains(x)) throw ContractViolation("relabel_excluding: x in set");
    const std::uint64_t low_mask = (std::uint64_t{1} << (x - 1)) - 1;
    const std::uint64_t low = s.bits() & low_mask;
    const std::uint64_t high = s.bits() & ~low_mask;
    return KSubset::from_bits(low | (high >> 1));
}

int sym_diff_half(const KSubset& a, const KSubset& b) {
    if (a.size() != b.size())
        throw ContractViolation("sym_diff_half: sets differ in size");
    return std::popcount(a.bits() ^ b.bits()) / 2;
}

std::uint64_t colex_rank(const KSubset& s) {
    std::uint64_t rank = 0;
    unsigned i = 1;
    for (int e : s.elements()) rank += binomial_u64(static_cast<unsigned>(e - 1), i++);
    return rank;
}

KSubset colex_unrank(std::uint64_t rank, int k) {
    if (k < 0 || k > KSubset::kMaxGround) throw RangeError("colex_unrank: bad k");
    KSubset out;
    std::uint64_t r = rank;
    for (int i = k; i >= 1; --i) {
        // Largest s with C(s-1, i) <= r; s-1 scanned downward from 63.
        int s = -1;
        for (int cand = KSubset::kMaxGround; cand >= i; --cand) {
            if (binomial_u64(static_cast<unsigned>(cand - 1), static_cast<unsigned>(i)) <= r) {
                s = cand;
                break;
            }
        }
        if (s < 0) throw RangeError("colex_unrank: rank out of range");
        out = out.with(s);
        r -= binomial_u64(static_cast<unsigned>(s - 1), static_cast<unsigned>(i));
    }
    if (r != 0 || out.size() != k) throw RangeError("colex_unrank: rank out of range");
    return out;
}

void for_each_k_subset(int n, int k, const std::function<void(const KSubset&)>& fn) {
    if (n < 0 || n > KSubset::kMaxGround) throw RangeError("for_each_k_subset: bad n");
    if (k <= 0 || k > n) return;
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << n) - 1);
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    for (;;) {
        fn(KSubset::from_bits(v));
        // Gosper's hack: next k-bit word in increasing order == next in colex.
        const std::uint64_t c = v & (~v + 1);
        const std::uint64_t r = v + c;
        if (r > full || r == 0) break;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

std::vector<KSubset> enumerate_k_subsets(int n, int k) {
    if (k > n || k <= 0) return {};
    const std::uint64_t count = binomial_u64(static_cast<unsigned>(n), static_cast<unsigned>(k));
    if (count > (std::uint64_t{1} << 24))
        throw ResourceError("enumerate_k_subsets: level too large to materialize");
    std::vector<KSubset> out;
    out.reserve(count);
    for_each_k_subset(n, k, [&](const KSubset& s) { out.push_back(s); });
    return out;
}

}  // namespace ekr
