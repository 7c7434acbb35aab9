#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ekr/errors.hpp"
#include "ekr/exact.hpp"
#include "ekr/subset.hpp"

using namespace ekr;

namespace {

// Independent enumeration oracle: build all k-subsets by recursive choice and
// sort by the colex comparator. Position in this list is the expected rank.
void collect_subsets(int n, int k, int from, std::vector<int>& cur,
                     std::vector<KSubset>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(KSubset::of(cur));
        return;
    }
    for (int e = from; e <= n; ++e) {
        cur.push_back(e);
        collect_subsets(n, k, e + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<KSubset> oracle_colex_order(int n, int k) {
    std::vector<KSubset> all;
    std::vector<int> cur;
    collect_subsets(n, k, 1, cur, all);
    std::sort(all.begin(), all.end());  // colex == bit order for equal sizes
    return all;
}

}  // namespace

TEST_CASE("binomial small cases") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(8, 0) == 1);
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(3, 8) == 0);  // b > a allowed, gives zero
    CHECK(binomial(30, 15) == ExactInt("155117520"));
    CHECK(binomial(64, 32) == ExactInt("1832624140942590534"));
}

TEST_CASE("Pascal identity up to 30") {
    for (unsigned a = 1; a <= 30; ++a)
        for (unsigned b = 1; b <= a; ++b)
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("binomial_u64 agrees with the exact path") {
    for (unsigned a = 0; a <= 64; a += 7)
        for (unsigned b = 0; b <= a + 2; b += 3)
            CHECK(ExactInt(static_cast<unsigned long>(binomial_u64(a, b))) == binomial(a, b));
}

TEST_CASE("KSubset basics") {
    const KSubset s = KSubset::of({1, 4, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(1));
    CHECK(s.contains(4));
    CHECK(!s.contains(2));
    CHECK(s.elements() == std::vector<int>{1, 4, 5});
    CHECK(s.min_element() == 1);
    CHECK(s.max_element() == 5);
    CHECK(s.without(4).elements() == std::vector<int>{1, 5});
    CHECK_THROWS_AS(s.with(0), RangeError);
    CHECK_THROWS_AS(s.with(65), RangeError);
}

TEST_CASE("colex rank examples") {
    CHECK(colex_rank(KSubset::of({1, 2})) == 0);
    CHECK(colex_rank(KSubset::of({2, 3})) == 2);  // C(1,1)+C(2,2)
    CHECK(colex_rank(KSubset::of({3, 4})) == 5);  // C(2,1)+C(3,2)
    CHECK(colex_rank(KSubset{}) == 0);            // empty set ranks 0
}

TEST_CASE("colex rank equals enumeration position") {
    for (int n = 1; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto expected = oracle_colex_order(n, k);
            for (std::size_t pos = 0; pos < expected.size(); ++pos)
                CHECK(colex_rank(expected[pos]) == pos);
        }
    }
}

TEST_CASE("colex unrank examples and inverse") {
    CHECK(colex_unrank(0, 2) == KSubset::of({1, 2}));
    CHECK(colex_unrank(5, 2) == KSubset::of({3, 4}));
    CHECK(colex_unrank(2, 2) == KSubset::of({2, 3}));
    CHECK_THROWS_AS(colex_unrank(binomial_u64(64, 2), 2), RangeError);
}

TEST_CASE("rank/unrank round-trip for n <= 12") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            for_each_k_subset(n, k, [&](const KSubset& s) {
                CHECK(colex_unrank(colex_rank(s), k) == s);
            });
}

TEST_CASE("enumeration order and contents") {
    const auto seq = enumerate_k_subsets(4, 2);
    const std::vector<KSubset> expected = {
        KSubset::of({1, 2}), KSubset::of({1, 3}), KSubset::of({2, 3}),
        KSubset::of({1, 4}), KSubset::of({2, 4}), KSubset::of({3, 4})};
    CHECK(seq == expected);
    CHECK(seq.size() == 6);

    CHECK(enumerate_k_subsets(3, 3) == std::vector<KSubset>{KSubset::of({1, 2, 3})});
    CHECK(enumerate_k_subsets(2, 3).empty());  // k > n

    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto level = enumerate_k_subsets(n, k);
            CHECK(std::is_sorted(level.begin(), level.end()));
            CHECK(std::adjacent_find(level.begin(), level.end()) == level.end());
            CHECK(level.size() == binomial_u64(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        }
}

TEST_CASE("sym_diff_half") {
    CHECK(sym_diff_half(KSubset::of({1, 2}), KSubset::of({1, 2})) == 0);
    CHECK(sym_diff_half(KSubset::of({1, 2}), KSubset::of({3, 4})) == 2);
    CHECK(sym_diff_half(KSubset::of({1, 2}), KSubset::of({1, 3})) == 1);
    CHECK_THROWS_AS(sym_diff_half(KSubset::of({1, 2}), KSubset::of({1, 2, 3})),
                    ContractViolation);

    // Equals k - |A intersect B| for equal sizes.
    const auto level = enumerate_k_subsets(7, 3);
    for (std::size_t i = 0; i < level.size(); i += 3)
        for (std::size_t j = 0; j < level.size(); j += 5) {
            const int inter = set_intersection(level[i], level[j]).size();
            CHECK(sym_diff_half(level[i], level[j]) == 3 - inter);
        }
}

TEST_CASE("relabel and complement helpers") {
    CHECK(relabel_excluding(KSubset::of({2, 3}), 1) == KSubset::of({1, 2}));
    CHECK(relabel_excluding(KSubset::of({2, 5}), 3) == KSubset::of({2, 4}));
    CHECK(relabel_excluding(KSubset::of({1, 2}), 5) == KSubset::of({1, 2}));
    CHECK_THROWS_AS(relabel_excluding(KSubset::of({2, 3}), 2), ContractViolation);

    CHECK(complement_in(KSubset::of({1, 5}), 5) == KSubset::of({2, 3, 4}));
    CHECK(is_subset(KSubset::of({2, 3}), KSubset::of({2, 3, 4})));
    CHECK(!is_subset(KSubset::of({2, 5}), KSubset::of({2, 3, 4})));
}
