#include "ekr/kneser.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ekr/errors.hpp"

namespace ekr {

KneserParams make_params(int n, int k) {
    if (n < 1 || n > KSubset::kMaxGround)
        throw DomainError("make_params: need 1 <= n <= 64");
    if (k < 1 || 2 * k >= n)
        throw DomainError("make_params: need 0 < k < n/2");
    KneserParams p;
    p.n = n;
    p.k = k;
    p.c = n - 2 * k;
    p.m = n - 1;
    p.star_size = binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1));
    p.star_complement_size = binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k));
    p.vertex_count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    if (p.c == 1) {
        p.p_zero = 0.75;
    } else {
        const double denom = to_double(
            binomial(static_cast<unsigned>(n - k - 1), static_cast<unsigned>(k - 1)));
        p.p_zero = std::log(static_cast<double>(n) * to_double(p.star_complement_size)) / denom;
    }
    return p;
}

bool Family::contains(const KSubset& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

ExactInt Family::star_defect() const {
    if (ExactInt(static_cast<unsigned long>(members_.size())) != star_size_)
        throw ContractViolation("star_defect: family is not star-sized");
    return star_size_ - max_degree_;
}

bool Family::is_potential_violator() const {
    return ExactInt(static_cast<unsigned long>(members_.size())) == star_size_ && !is_star();
}

Family family_stats(std::vector<KSubset> members, const KneserParams& params) {
    const std::uint64_t ground_mask =
        (params.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << params.n) - 1);
    for (const auto& s : members) {
        if (s.size() != params.k)
            throw ContractViolation("family_stats: member has wrong size");
        if (s.bits() & ~ground_mask)
            throw ContractViolation("family_stats: member exceeds ground set");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    Family f;
    f.n_ = params.n;
    f.star_size_ = params.star_size;
    f.members_ = std::move(members);
    f.degree_.assign(static_cast<std::size_t>(params.n) + 1, 0);
    for (const auto& s : f.members_)
        for (int e : s.elements()) ++f.degree_[static_cast<std::size_t>(e)];
    f.max_degree_ = 0;
    for (int x = 1; x <= params.n; ++x)
        f.max_degree_ = std::max(f.max_degree_, f.degree_[static_cast<std::size_t>(x)]);
    for (int x = 1; x <= params.n; ++x)
        if (f.degree_[static_cast<std::size_t>(x)] == f.max_degree_ && f.max_degree_ > 0)
            f.apexes_.push_back(x);

    f.internal_edges_ = 0;
    for (std::size_t i = 0; i < f.members_.size(); ++i)
        for (std::size_t j = i + 1; j < f.members_.size(); ++j)
            if (is_disjoint(f.members_[i], f.members_[j])) ++f.internal_edges_;

    // A star is exactly all C(n-1,k-1) sets through one element.
    if (ExactInt(static_cast<unsigned long>(f.members_.size())) == params.star_size) {
        std::uint64_t common = ground_mask;
        for (const auto& s : f.members_) common &= s.bits();
        if (common != 0) {
            f.star_witness_ = std::countr_zero(common) + 1;
        }
    }
    return f;
}

std::vector<KSubset> star_family(const KneserParams& params, int x) {
    if (x < 1 || x > params.n) throw DomainError("star_family: x outside ground set");
    std::vector<KSubset> out;
    for_each_k_subset(params.n, params.k, [&](const KSubset& s) {
        if (s.contains(x)) out.push_back(s);
    });
    return out;
}

std::pair<std::vector<KSubset>, std::vector<KSubset>>
split_at_apex(const Family& family, int x, const KneserParams& params) {
    if (ExactInt(static_cast<unsigned long>(family.size())) != params.star_size)
        throw ContractViolation("split_at_apex: family is not star-sized");
    if (family.degree(x) != family.max_degree())
        throw ContractViolation("split_at_apex: x does not attain the maximum degree");

    std::vector<KSubset> moved;  // members avoiding x
    for (const auto& s : family.members())
        if (!s.contains(x)) moved.push_back(s);

    std::vector<KSubset> holes;  // complements of the star members the family lacks
    for (const auto& t : star_family(params, x))
        if (!family.contains(t)) holes.push_back(complement_in(t, params.n));
    std::sort(holes.begin(), holes.end());
    return {std::move(moved), std::move(holes)};
}

}  // namespace ekr
