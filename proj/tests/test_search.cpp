#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "brute_force_52.hpp"
#include "ekr/ekr_search.hpp"
#include "ekr/kneser.hpp"
#include "ekr/oracle.hpp"
#include "ekr/rng.hpp"
#include "ekr/subset.hpp"

using namespace ekr;
using ekr_testing::brute_force_is_ekr_52;

TEST_CASE("full Kneser graph is EKR at (5,2) and (7,3)") {
    for (auto [n, k] : {std::pair{5, 2}, std::pair{7, 3}}) {
        const KneserParams p = make_params(n, k);
        const EkrVerdict verdict = is_ekr(SampledGraph::full(p));
        CHECK(verdict.status == EkrStatus::Ekr);
        CHECK(verdict.method == SearchMethod::ExhaustiveSearch);
        CHECK(!verdict.witness.has_value());
    }
}

TEST_CASE("empty graph violates EKR") {
    const KneserParams p = make_params(5, 2);
    const EkrVerdict verdict = is_ekr(SampledGraph::empty(p));
    CHECK(verdict.status == EkrStatus::Violation);
    REQUIRE(verdict.witness.has_value());
    CHECK(!verdict.witness->is_star());
}

TEST_CASE("single missing edge creates the expected witness") {
    const KneserParams p = make_params(5, 2);
    SampledGraph g = SampledGraph::full(p);
    const auto u = colex_rank(KSubset::of({1, 4}));
    const auto v = colex_rank(KSubset::of({2, 3}));
    g.remove_edge(u, v);

    const EkrVerdict verdict = is_ekr(g);
    CHECK(verdict.status == EkrStatus::Violation);
    REQUIRE(verdict.witness.has_value());

    // The freed families are exactly those whose one internal edge was the
    // removed pair: {12,13,14,23} plus three siblings through other apexes.
    const Family expected = family_stats({KSubset::of({1, 2}), KSubset::of({1, 3}),
                                          KSubset::of({1, 4}), KSubset::of({2, 3})},
                                         p);
    const NearStarScan scan = near_star_scan(g);
    CHECK(scan.violations.size() == 4);
    bool found = false;
    for (const auto& fam : scan.violations)
        if (fam.members() == expected.members()) found = true;
    CHECK(found);
    for (const auto& fam : scan.violations) {
        CHECK(fam.internal_edges() == 1);
        CHECK(fam.star_defect() == 1);
    }
}

TEST_CASE("near-star scan candidate count and p extremes") {
    const KneserParams p52 = make_params(5, 2);
    const NearStarScan at_zero = near_star_scan(SampledGraph::empty(p52));
    CHECK(at_zero.candidates == 120);  // n * M * N = 5 * 4 * 6
    CHECK(!at_zero.violations.empty());

    const NearStarScan at_one = near_star_scan(SampledGraph::full(p52));
    CHECK(at_one.candidates == 120);
    CHECK(at_one.violations.empty());

    const KneserParams p73 = make_params(7, 3);
    CHECK(near_star_scan(SampledGraph::full(p73)).violations.empty());
    CHECK(near_star_scan(SampledGraph::full(p73)).candidates == 7 * 15 * 20);
}

TEST_CASE("near-star hits are genuine violations") {
    const KneserParams p = make_params(5, 2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SplitMix64 rng(seed);
        const double prob = 0.2 + 0.6 * rng.next_unit();
        const SampledGraph g = SampledGraph::from_oracle(EdgeOracle(p, prob, seed));
        for (const auto& fam : near_star_scan(g).violations) {
            CHECK(fam.is_potential_violator());
            // every internal Kneser edge of the family must be absent
            const auto& mem = fam.members();
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t j = i + 1; j < mem.size(); ++j)
                    if (is_disjoint(mem[i], mem[j])) CHECK(!g.edge(mem[i], mem[j]));
        }
    }
}

TEST_CASE("search agrees with brute force at (5,2) over random oracles") {
    const KneserParams p = make_params(5, 2);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        SplitMix64 rng(seed * 31 + 1);
        const double prob = rng.next_unit();
        const SampledGraph g = SampledGraph::from_oracle(EdgeOracle(p, prob, seed));
        const EkrVerdict verdict = is_ekr(g);
        CHECK(verdict.conclusive());
        CHECK((verdict.status == EkrStatus::Ekr) == brute_force_is_ekr_52(g));
        if (verdict.status == EkrStatus::Violation) {
            // witness is independent and not a star
            const auto& mem = verdict.witness->members();
            CHECK(mem.size() >= 4);
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t j = i + 1; j < mem.size(); ++j)
                    if (is_disjoint(mem[i], mem[j])) CHECK(!g.edge(mem[i], mem[j]));
            CHECK(!verdict.witness->is_star());
        }
    }
}

TEST_CASE("monotone verdicts along coupled oracles") {
    const KneserParams p = make_params(5, 2);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        bool prev_ekr = false;
        for (int step = 0; step <= 10; ++step) {
            const EkrVerdict verdict =
                is_ekr(EdgeOracle(p, step / 10.0, trial_seed(777, seed)));
            const bool now = (verdict.status == EkrStatus::Ekr);
            if (prev_ekr) CHECK(now);  // adding edges cannot break EKR
            prev_ekr = now;
        }
    }
}

TEST_CASE("budget exhaustion reports timed-out") {
    const KneserParams p = make_params(7, 3);
    const SampledGraph g = SampledGraph::full(p);
    const EkrVerdict verdict = is_ekr(g, SearchBudget{3});
    CHECK(verdict.method == SearchMethod::TimedOut);
    CHECK(!verdict.conclusive());
}

TEST_CASE("search handles the c >= 2 regime") {
    const KneserParams p = make_params(6, 2);  // triangles exist here
    CHECK(is_ekr(SampledGraph::full(p)).status == EkrStatus::Ekr);
    CHECK(is_ekr(SampledGraph::empty(p)).status == EkrStatus::Violation);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const EkrVerdict verdict = is_ekr(EdgeOracle(p, 0.9, seed));
        CHECK(verdict.conclusive());
        if (verdict.status == EkrStatus::Violation) {
            CHECK(verdict.witness.has_value());
            CHECK(!verdict.witness->is_star());
        }
    }
}

TEST_CASE("near-star verdict wraps the scan") {
    const KneserParams p = make_params(5, 2);
    const EkrVerdict clean = near_star_verdict(SampledGraph::full(p));
    CHECK(clean.status == EkrStatus::Ekr);
    CHECK(clean.method == SearchMethod::NearStarOnly);
    CHECK(!clean.conclusive());  // scan found nothing; not a proof of EKR

    const EkrVerdict hit = near_star_verdict(SampledGraph::empty(p));
    CHECK(hit.status == EkrStatus::Violation);
    CHECK(hit.conclusive());
    CHECK(hit.witness.has_value());
}

TEST_CASE("k = 1 reduces to completeness of the sampled graph") {
    const KneserParams p = make_params(4, 1);
    CHECK(is_ekr(SampledGraph::full(p)).status == EkrStatus::Ekr);
    SampledGraph g = SampledGraph::full(p);
    g.remove_edge(0, 2);
    const EkrVerdict verdict = is_ekr(g);
    CHECK(verdict.status == EkrStatus::Violation);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->size() == 2);
}
