#include "ekr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ekr/errors.hpp"
#include "ekr/johnson.hpp"

namespace ekr {

namespace {

// Natural log of an exact integer without overflow: mantissa + exponent.
double log_exact(const ExactInt& v) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

void check_uniform_level(const std::vector<KSubset>& s, int size, const char* what) {
    for (const auto& x : s)
        if (x.size() != size) throw ContractViolation(what);
}

std::uint64_t disjoint_pairs(const std::vector<KSubset>& a) {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (is_disjoint(a[i], a[j])) ++e;
    return e;
}

}  // namespace

double BoundConfig::xi(const KneserParams& params, double p) const {
    if (params.c == 1) {
        if (epsilon <= 0.0 || epsilon >= 1.0)
            throw DomainError("BoundConfig: epsilon must lie in (0,1)");
        return std::log(1.0 / epsilon);
    }
    return p;
}

double BoundConfig::effective_zeta(const KneserParams& params) const {
    if (zeta) return *zeta;
    return static_cast<double>(params.c) /
           ((10.0 * big_k) * (10.0 * big_k) * static_cast<double>(params.n));
}

ApexContext make_apex_context(const Family& family, int apex, const KneserParams& params) {
    ApexContext ctx;
    ctx.params = params;
    ctx.apex = apex;
    auto [moved, holes] = split_at_apex(family, apex, params);
    for (const auto& s : moved) ctx.side_a.push_back(relabel_excluding(s, apex));
    for (const auto& s : holes) ctx.side_b.push_back(relabel_excluding(s, apex));
    std::sort(ctx.side_a.begin(), ctx.side_a.end());
    std::sort(ctx.side_b.begin(), ctx.side_b.end());
    ctx.defect = ExactInt(static_cast<unsigned long>(ctx.side_a.size()));
    ctx.mu = make_rational(ctx.defect,
                           binomial(static_cast<unsigned>(params.m),
                                    static_cast<unsigned>(params.k)));
    ctx.family_edges = family.internal_edges();
    return ctx;
}

ExactInt lambda_count(const std::vector<KSubset>& s, const std::vector<KSubset>& t) {
    if (!s.empty() && !t.empty()) {
        const int ks = s.front().size();
        const int kt = t.front().size();
        if (ks >= kt) throw ContractViolation("lambda_count: levels must increase");
        check_uniform_level(s, ks, "lambda_count: mixed sizes in S");
        check_uniform_level(t, kt, "lambda_count: mixed sizes in T");
    }
    ExactInt count = 0;
    for (const auto& a : s)
        for (const auto& b : t)
            if (is_subset(a, b)) ++count;
    return count;
}

ExactInt lambda_into_b_complement(const ApexContext& ctx) {
    ExactInt lam = 0;
    for_each_k_subset(ctx.params.m, ctx.params.k + ctx.params.c, [&](const KSubset& w) {
        if (std::binary_search(ctx.side_b.begin(), ctx.side_b.end(), w)) return;
        for (const auto& a : ctx.side_a)
            if (is_subset(a, w)) ++lam;
    });
    return lam;
}

ExactInt verify_mo1(const ApexContext& ctx) {
    const int m = ctx.params.m;
    const int k = ctx.params.k;
    const int c = ctx.params.c;

    ExactInt lam_abar_b = 0;  // L(~A, B)
    for_each_k_subset(m, k, [&](const KSubset& u) {
        if (std::binary_search(ctx.side_a.begin(), ctx.side_a.end(), u)) return;
        for (const auto& b : ctx.side_b)
            if (is_subset(u, b)) ++lam_abar_b;
    });

    const ExactInt correction =
        binomial(static_cast<unsigned>(k + c - 1), static_cast<unsigned>(c - 1)) * ctx.defect;
    return lam_abar_b - lambda_into_b_complement(ctx) - correction;
}

ExactInt verify_gle(const ApexContext& ctx) {
    const ExactInt edges_f(static_cast<unsigned long>(ctx.family_edges));
    const ExactInt edges_a(static_cast<unsigned long>(disjoint_pairs(ctx.side_a)));
    return edges_f - lambda_into_b_complement(ctx) - edges_a;
}

ExactInt verify_mo2(int m, int k, int c, const std::vector<KSubset>& a) {
    if (m != 2 * k + c - 1)
        throw ContractViolation("verify_mo2: requires the ambient relation m = 2k+c-1");
    check_uniform_level(a, k, "verify_mo2: A not at level k");
    std::vector<KSubset> sorted_a = a;
    std::sort(sorted_a.begin(), sorted_a.end());

    // Phi: triples (A', B, A'') with A' in A, A'' outside, |A' ^ A''| = 2,
    // and B a (k+c)-superset of their union, counted directly.
    ExactInt phi = 0;
    for (const auto& a1 : sorted_a) {
        for_each_k_subset(m, k, [&](const KSubset& a2) {
            if (std::binary_search(sorted_a.begin(), sorted_a.end(), a2)) return;
            if (sym_diff_half(a1, a2) != 1) return;
            const KSubset u = set_union(a1, a2);
            for_each_k_subset(m, k + c, [&](const KSubset& b) {
                if (is_subset(u, b)) ++phi;
            });
        });
    }

    const ExactInt beta = edge_boundary(m, k, 1, sorted_a);
    return phi - beta * binomial(static_cast<unsigned>(k + c - 2), static_cast<unsigned>(c - 1));
}

Rational betaprop_bound(const ApexContext& ctx) {
    if (ctx.side_a.empty())
        throw DomainError("betaprop_bound: star context (empty side A)");
    const int m = ctx.params.m;
    const int k = ctx.params.k;
    const int c = ctx.params.c;

    const ExactInt beta_c = edge_boundary(m, k, c, ctx.side_a);
    const ExactInt beta_1 = (c == 1) ? beta_c : edge_boundary(m, k, 1, ctx.side_a);

    const Rational q1 = make_rational(
        beta_c, 2 * binomial(static_cast<unsigned>(k), static_cast<unsigned>(c)));
    const Rational q2 = make_rational(
        binomial(static_cast<unsigned>(k + c - 2), static_cast<unsigned>(c - 1)) * beta_1,
        ExactInt(2 * c * k));
    const Rational q3 = make_rational(
        binomial(static_cast<unsigned>(k + c - 1), static_cast<unsigned>(c - 1)) * ctx.defect,
        ExactInt(2));
    return std::max(q1, q2) - q3;
}

Mainobs2 mainobs2_bound(const ApexContext& ctx, const BoundConfig& cfg) {
    if (ctx.side_a.empty()) throw DomainError("mainobs2_bound: mu = 0");
    const int m = ctx.params.m;
    const int k = ctx.params.k;
    const int c = ctx.params.c;

    const Rational prefactor = make_rational(
        ctx.defect * binomial(static_cast<unsigned>(k + c - 2), static_cast<unsigned>(c - 1)),
        ExactInt(2));

    Mainobs2 out;
    out.term1 = prefactor * (Rational(1) - make_rational(ExactInt(m), ExactInt(k)) * ctx.mu);
    const double log_inv_mu = -std::log(to_double(ctx.mu));
    out.term2 = to_double(prefactor) *
                (cfg.gamma * static_cast<double>(m) / (static_cast<double>(c) * k) * log_inv_mu -
                 static_cast<double>(k + c - 1) / k);
    return out;
}

double lemma_ml_ratio(const Family& family, const KneserParams& params) {
    if (!family.is_potential_violator())
        throw DomainError("lemma_ml_ratio: family must be star-sized and not a star");
    const ExactInt defect = family.star_defect();
    const double a = to_double(defect);
    const double n_over_a = to_double(params.star_complement_size) / a;
    const double denom =
        to_double(binomial(static_cast<unsigned>(params.n - params.k - 1),
                           static_cast<unsigned>(params.k - 1))) *
        a * std::log(n_over_a);
    return static_cast<double>(family.internal_edges()) * params.k / denom;
}

namespace {

void consider_family(const Family& f, const KneserParams& params, ThetaScan& scan) {
    const double ratio = lemma_ml_ratio(f, params);
    ++scan.families;
    scan.min_edges = std::min(scan.min_edges, f.internal_edges());
    if (ratio < scan.theta_star) {
        scan.theta_star = ratio;
        scan.argmin = f;
    }
}

}  // namespace

ThetaScan exhaustive_theta(const KneserParams& params) {
    const unsigned long vertex_count = params.vertex_count.get_ui();
    if (params.vertex_count > 64)
        throw ResourceError("exhaustive_theta: vertex set exceeds enumeration width");
    const ExactInt total = binomial(vertex_count, params.star_size.get_ui());
    if (total > 5'000'000)
        throw ResourceError("exhaustive_theta: violator class too large to enumerate");

    const auto vertices = enumerate_k_subsets(params.n, params.k);
    ThetaScan scan;
    scan.theta_star = std::numeric_limits<double>::infinity();
    scan.min_edges = std::numeric_limits<std::uint64_t>::max();
    scan.exhaustive = true;
    for_each_k_subset(static_cast<int>(vertex_count), static_cast<int>(params.star_size.get_ui()),
                      [&](const KSubset& combo) {
                          std::vector<KSubset> members;
                          for (int pos : combo.elements())
                              members.push_back(vertices[static_cast<std::size_t>(pos - 1)]);
                          Family f = family_stats(std::move(members), params);
                          if (f.is_star()) return;
                          consider_family(f, params, scan);
                      });
    return scan;
}

Family random_violator(const KneserParams& params, SplitMix64& rng) {
    const auto vertices = enumerate_k_subsets(params.n, params.k);
    const std::size_t star_size = params.star_size.get_ui();
    std::vector<std::size_t> idx(vertices.size());
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        // Partial Fisher-Yates: the first star_size entries become the sample.
        for (std::size_t i = 0; i < star_size; ++i) {
            const std::size_t j = i + rng.next_below(idx.size() - i);
            std::swap(idx[i], idx[j]);
        }
        std::vector<KSubset> members;
        members.reserve(star_size);
        for (std::size_t i = 0; i < star_size; ++i) members.push_back(vertices[idx[i]]);
        Family f = family_stats(std::move(members), params);
        if (!f.is_star()) return f;
    }
}

ThetaScan sampled_theta(const KneserParams& params, std::uint64_t samples,
                        std::uint64_t seed) {
    ThetaScan scan;
    scan.theta_star = std::numeric_limits<double>::infinity();
    scan.min_edges = std::numeric_limits<std::uint64_t>::max();

    // Every near-star family first: the scan minimum is expected there.
    const auto vertices = enumerate_k_subsets(params.n, params.k);
    for (int x = 1; x <= params.n; ++x) {
        std::vector<KSubset> star;
        std::vector<KSubset> outside;
        for (const auto& s : vertices)
            (s.contains(x) ? star : outside).push_back(s);
        for (std::size_t drop = 0; drop < star.size(); ++drop) {
            for (const auto& added : outside) {
                std::vector<KSubset> members;
                members.reserve(star.size());
                for (std::size_t i = 0; i < star.size(); ++i)
                    if (i != drop) members.push_back(star[i]);
                members.push_back(added);
                Family f = family_stats(std::move(members), params);
                if (f.is_star()) continue;
                consider_family(f, params, scan);
            }
        }
    }

    SplitMix64 rng(seed);
    for (std::uint64_t t = 0; t < samples; ++t)
        consider_family(random_violator(params, rng), params, scan);
    return scan;
}

DtBound dt_bound(const KneserParams& params, const BoundConfig& cfg, const Family& family) {
    if (!family.is_potential_violator())
        throw DomainError("dt_bound: family must be star-sized and not a star");
    DtBound out;
    const double zeta = cfg.effective_zeta(params);
    const double zeta_cap = static_cast<double>(params.c) /
                            ((10.0 * cfg.big_k) * (10.0 * cfg.big_k) * params.n);
    const double defect = to_double(family.star_defect());
    const double threshold = cfg.big_k * zeta * (static_cast<double>(params.n) / params.c) *
                             to_double(params.star_size);
    out.applicable = (zeta <= zeta_cap + 1e-15) && (defect > threshold);
    out.bound = zeta * to_double(params.star_size) *
                to_double(binomial(static_cast<unsigned>(params.n - params.k - 1),
                                   static_cast<unsigned>(params.k - 1)));
    return out;
}

double union_bound_value(const KneserParams& params, double p, const BoundConfig& cfg) {
    if (cfg.theta <= 0.0) throw DomainError("union_bound_value: theta must be positive");
    const double xi = cfg.xi(params, p);

    const ExactInt a_cap_exact =
        (ExactInt(params.k) * params.star_complement_size) / params.n;  // floor
    if (a_cap_exact > 1'000'000)
        throw ResourceError("union_bound_value: summation range beyond desk scale");
    const auto a_cap = a_cap_exact.get_ui();

    const double coeff =
        xi * cfg.theta *
        to_double(binomial(static_cast<unsigned>(params.n - params.k - 1),
                           static_cast<unsigned>(params.k - 1))) /
        params.k;
    const double log_n_count = log_exact(params.star_complement_size);

    // Kahan-compensated accumulation of the exact-binomial terms.
    double sum = 0.0, comp = 0.0;
    for (unsigned long a = 1; a <= a_cap; ++a) {
        const ExactInt ways = binomial(params.star_size.get_ui(), a) *
                              binomial(params.star_complement_size.get_ui(), a);
        const double log_term =
            log_exact(ways) - coeff * static_cast<double>(a) *
                                  (log_n_count - std::log(static_cast<double>(a)));
        const double term = std::exp(log_term);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return params.n * sum;
}

TargetReport target_comparison(const ApexContext& ctx, const BoundConfig& cfg) {
    if (ctx.side_a.empty()) throw DomainError("target_comparison: star context");
    if (!(cfg.theta < cfg.gamma / 5.0))
        throw ContractViolation("target_comparison: requires theta < gamma/5");
    const int m = ctx.params.m;
    const int k = ctx.params.k;
    const int c = ctx.params.c;

    TargetReport rep;
    const double log_inv_mu = -std::log(to_double(ctx.mu));
    rep.lhs = 2.0 * (k + c - 1) / (static_cast<double>(c) * k) * cfg.theta * log_inv_mu;
    rep.rhs = 4.0 / c * cfg.theta * log_inv_mu;
    rep.branch = (log_inv_mu <= static_cast<double>(c) / cfg.gamma) ? 1 : 2;
    rep.term1_unit = 1.0 - static_cast<double>(m) / k * to_double(ctx.mu);
    rep.term2_unit =
        cfg.gamma * m / (static_cast<double>(c) * k) * log_inv_mu -
        static_cast<double>(k + c - 1) / k;
    rep.max_term = std::max(rep.term1_unit, rep.term2_unit);
    rep.max_exceeds_rhs = rep.max_term >= rep.rhs - 1e-9;
    if (rep.branch == 2) {
        rep.branch2_floor = cfg.gamma / c * log_inv_mu;
        rep.branch2_ok = rep.term2_unit >= rep.branch2_floor - 1e-9;
    }
    return rep;
}

}  // namespace ekr
