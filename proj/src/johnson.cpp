#include "ekr/johnson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>
#include <utility>

#include "ekr/errors.hpp"
#include "ekr/jacobi.hpp"
#include "ekr/rng.hpp"

namespace ekr {

namespace {

void check_level_params(int m, int k, int i) {
    if (m < 1 || m > KSubset::kMaxGround) throw DomainError("johnson: bad m");
    if (k < 1 || k > m) throw DomainError("johnson: bad k");
    if (i < 1 || i > k) throw DomainError("johnson: bad distance class");
}

void check_members(int m, int k, const std::vector<KSubset>& a) {
    for (const auto& s : a) {
        if (s.size() != k) throw ContractViolation("johnson: member not at level k");
        if (s.max_element() > m) throw ContractViolation("johnson: member exceeds ground set");
    }
}

std::unordered_set<std::uint64_t> bits_set(const std::vector<KSubset>& a) {
    std::unordered_set<std::uint64_t> s;
    s.reserve(a.size() * 2);
    for (const auto& x : a) s.insert(x.bits());
    return s;
}

}  // namespace

ExactInt johnson_degree(int m, int k, int i) {
    check_level_params(m, k, i);
    return binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) *
           binomial(static_cast<unsigned>(m - k), static_cast<unsigned>(i));
}

JohnsonGraph make_johnson(int m, int k, int i) {
    JohnsonGraph g;
    g.m = m;
    g.k = k;
    g.i = i;
    g.degree = johnson_degree(m, k, i);
    return g;
}

ExactInt eigenvalue_summand(int m, int k, int c, int j, int i) {
    if (j - i < 0 || k - j < 0 || c - i < 0 || m - k - j < 0) return 0;
    return binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)) *
           binomial(static_cast<unsigned>(k - j), static_cast<unsigned>(c - i)) *
           binomial(static_cast<unsigned>(m - k - j), static_cast<unsigned>(c - i));
}

ExactInt adjacency_eigenvalue(int m, int k, int c, int j) {
    if (m < 1 || k < 1 || 2 * k > m) throw DomainError("adjacency_eigenvalue: need k <= m/2");
    if (c < 1 || c > k) throw DomainError("adjacency_eigenvalue: need 1 <= c <= k");
    if (j < 0 || j > k) throw DomainError("adjacency_eigenvalue: need 0 <= j <= k");
    ExactInt sum = 0;
    for (int i = 0; i <= c; ++i) {
        const ExactInt s = eigenvalue_summand(m, k, c, j, i);
        if (i % 2 == 0)
            sum += s;
        else
            sum -= s;
    }
    return sum;
}

ExactInt eigenvalue_multiplicity(int m, int j) {
    if (j == 0) return 1;
    return binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)) -
           binomial(static_cast<unsigned>(m), static_cast<unsigned>(j - 1));
}

GapFormula laplacian_gap_formula(int m, int k, int c) {
    if (m < 1 || k < 1 || 2 * k > m) throw DomainError("laplacian_gap_formula: need k <= m/2");
    if (c < 1 || c > k) throw DomainError("laplacian_gap_formula: need 1 <= c <= k");
    GapFormula g;
    const ExactInt num = ExactInt(m) *
                         binomial(static_cast<unsigned>(k), static_cast<unsigned>(c)) *
                         binomial(static_cast<unsigned>(m - k - 1), static_cast<unsigned>(c - 1));
    g.value = make_rational(num, ExactInt(k));
    g.proven_regime = (k > 6 * c);
    return g;
}

std::vector<double> dense_spectrum_oracle(int m, int k, int c) {
    check_level_params(m, k, c);
    const ExactInt count = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
    if (count > kDenseBudget)
        throw ResourceError("dense_spectrum_oracle: level exceeds dense budget");
    const auto level = enumerate_k_subsets(m, k);
    const std::size_t n = level.size();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (sym_diff_half(level[p], level[q]) == c) {
                a[p * n + q] = 1.0;
                a[q * n + p] = 1.0;
            }
    return jacobi_eigenvalues(std::move(a), n);
}

double laplacian_gap_numeric(int m, int k, int c) {
    const auto spectrum = dense_spectrum_oracle(m, k, c);
    const double degree = to_double(johnson_degree(m, k, c));
    // Second largest of the multiset (largest is the degree for a connected
    // regular graph; a repeated maximum correctly reports gap 0).
    return degree - spectrum[spectrum.size() - 2];
}

void for_each_johnson_neighbor(const KSubset& s, int m, int i,
                               const std::function<void(const KSubset&)>& fn) {
    const auto inside = s.elements();
    const auto outside = complement_in(s, m).elements();
    const int k = s.size();
    if (i > k || i > m - k) return;
    // Choose i elements to drop and i to add, via colex masks over positions.
    for_each_k_subset(k, i, [&](const KSubset& drop_idx) {
        KSubset base = s;
        for (int pos : drop_idx.elements()) base = base.without(inside[static_cast<std::size_t>(pos - 1)]);
        for_each_k_subset(m - k, i, [&](const KSubset& add_idx) {
            KSubset t = base;
            for (int pos : add_idx.elements()) t = t.with(outside[static_cast<std::size_t>(pos - 1)]);
            fn(t);
        });
    });
}

ExactInt edge_boundary(int m, int k, int i, const std::vector<KSubset>& a) {
    check_level_params(m, k, i);
    check_members(m, k, a);
    const auto members = bits_set(a);
    ExactInt crossing = 0;
    for (const auto& s : a) {
        for_each_johnson_neighbor(s, m, i, [&](const KSubset& t) {
            if (!members.contains(t.bits())) ++crossing;
        });
    }
    return crossing;
}

SpectrumReport spectrum_report(int m, int k, int c) {
    SpectrumReport r;
    r.m = m;
    r.k = k;
    r.c = c;
    for (int j = 0; j <= k; ++j) {
        r.formula_eigenvalues.push_back(adjacency_eigenvalue(m, k, c, j));
        r.multiplicities.push_back(eigenvalue_multiplicity(m, j));
        std::vector<ExactInt> row;
        for (int i = 0; i <= c; ++i) row.push_back(eigenvalue_summand(m, k, c, j, i));
        r.s_table.push_back(std::move(row));
    }
    r.gap_formula = laplacian_gap_formula(m, k, c);
    r.numeric_eigenvalues = dense_spectrum_oracle(m, k, c);
    r.gap_numeric = to_double(johnson_degree(m, k, c)) -
                    r.numeric_eigenvalues[r.numeric_eigenvalues.size() - 2];

    // Expand the formula multiset, align both sorted multisets, and report the
    // worst per-j deviation.
    std::vector<std::pair<double, int>> expanded;  // (value, j)
    for (int j = 0; j <= k; ++j) {
        const auto mult = r.multiplicities[static_cast<std::size_t>(j)].get_ui();
        for (unsigned long t = 0; t < mult; ++t)
            expanded.emplace_back(to_double(r.formula_eigenvalues[static_cast<std::size_t>(j)]), j);
    }
    std::sort(expanded.begin(), expanded.end());
    r.residuals.assign(static_cast<std::size_t>(k) + 1, 0.0);
    if (expanded.size() == r.numeric_eigenvalues.size()) {
        for (std::size_t idx = 0; idx < expanded.size(); ++idx) {
            const double diff = std::abs(expanded[idx].first - r.numeric_eigenvalues[idx]);
            auto& res = r.residuals[static_cast<std::size_t>(expanded[idx].second)];
            res = std::max(res, diff);
            r.max_residual = std::max(r.max_residual, diff);
        }
    } else {
        r.max_residual = std::numeric_limits<double>::infinity();
    }
    return r;
}

MarginReport check_alon_milman(int m, int k, int c, const std::vector<KSubset>& a,
                               double gap) {
    check_level_params(m, k, c);
    check_members(m, k, a);
    MarginReport rep;
    rep.gap_used = gap;
    rep.lhs = to_double(edge_boundary(m, k, c, a));
    const double level_size = to_double(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
    const double mu = static_cast<double>(a.size()) / level_size;
    rep.rhs = gap * static_cast<double>(a.size()) * (1.0 - mu);
    rep.margin = rep.lhs - rep.rhs;
    return rep;
}

MarginReport check_alon_milman(int m, int k, int c, const std::vector<KSubset>& a) {
    const GapFormula f = laplacian_gap_formula(m, k, c);
    const double gap = f.proven_regime ? to_double(f.value) : laplacian_gap_numeric(m, k, c);
    MarginReport rep = check_alon_milman(m, k, c, a, gap);
    rep.formula_gap = f.proven_regime;
    return rep;
}

double log_sobolev_ratio(int m, int k, const std::vector<KSubset>& a) {
    check_level_params(m, k, 1);
    check_members(m, k, a);
    const ExactInt level_size = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
    if (a.empty() || ExactInt(static_cast<unsigned long>(a.size())) >= level_size)
        throw DomainError("log_sobolev_ratio: A must be a proper nonempty subset");
    const double beta = to_double(edge_boundary(m, k, 1, a));
    const double mu = static_cast<double>(a.size()) / to_double(level_size);
    return beta / (static_cast<double>(m) * static_cast<double>(a.size()) * std::log(1.0 / mu));
}

double min_alon_milman_margin(int m, int k, int c, std::uint64_t trials,
                              std::uint64_t seed) {
    const auto level = enumerate_k_subsets(m, k);
    const GapFormula f = laplacian_gap_formula(m, k, c);
    const double gap = f.proven_regime ? to_double(f.value) : laplacian_gap_numeric(m, k, c);
    SplitMix64 rng(seed);
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double density = rng.next_unit();
        std::vector<KSubset> a;
        for (const auto& s : level)
            if (rng.next_unit() < density) a.push_back(s);
        min_margin = std::min(min_margin, check_alon_milman(m, k, c, a, gap).margin);
    }
    return min_margin;
}

double calibrate_gamma(const std::vector<std::pair<int, int>>& levels,
                       std::uint64_t random_trials, std::uint64_t seed) {
    double min_ratio = std::numeric_limits<double>::infinity();
    SplitMix64 rng(seed);
    for (const auto& [m, k] : levels) {
        const auto level = enumerate_k_subsets(m, k);
        // Singletons.
        for (const auto& s : level)
            min_ratio = std::min(min_ratio, log_sobolev_ratio(m, k, {s}));
        // Element cuts: all sets through a fixed element.
        for (int x = 1; x <= m; ++x) {
            std::vector<KSubset> cut;
            for (const auto& s : level)
                if (s.contains(x)) cut.push_back(s);
            if (!cut.empty() && cut.size() < level.size())
                min_ratio = std::min(min_ratio, log_sobolev_ratio(m, k, cut));
        }
        // Random proper subsets.
        for (std::uint64_t t = 0; t < random_trials; ++t) {
            const double density = rng.next_unit();
            std::vector<KSubset> a;
            for (const auto& s : level)
                if (rng.next_unit() < density) a.push_back(s);
            if (!a.empty() && a.size() < level.size())
                min_ratio = std::min(min_ratio, log_sobolev_ratio(m, k, a));
        }
    }
    return min_ratio;
}

}  // namespace ekr
