#include "ekr/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekr/bounds.hpp"
#include "ekr/ekr_search.hpp"
#include "ekr/errors.hpp"
#include "ekr/johnson.hpp"
#include "ekr/kneser.hpp"
#include "ekr/montecarlo.hpp"
#include "ekr/oracle.hpp"

namespace ekr::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    int n = 5;
    int k = 2;
    int m = 4;
    int c = 1;
    double p = 0.9;
    double theta = 0.05;
    double gamma = 0.45;
    double epsilon = 0.01;
    double big_c = 100.0;
    double zeta = -1.0;  // negative: use the precondition maximum
    double big_k = 1.0;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 12345;
    double tol = 0.01;
    std::uint64_t time_budget = 0;  // whole-command wall clock, seconds; 0 = off
    std::string output;
    std::string format = "text";
};

struct Report {
    std::string command;
    json config;
    json results = json::object();
    std::vector<std::string> failures;
    std::vector<json> rows;  // flat rows for the csv format
};

// Wall-clock guard for long suites; trips the resource exit code.
struct Deadline {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::uint64_t limit_seconds = 0;

    void check() const {
        if (limit_seconds == 0) return;
        const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        if (static_cast<std::uint64_t>(elapsed) > limit_seconds)
            throw ResourceError("time budget exhausted");
    }
};

// Doubles carry 12 significant digits everywhere in reports.
double sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

json num(double v) {
    if (!std::isfinite(v)) return json(nullptr);
    return json(sig12(v));
}

json exact_json(const ExactInt& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json subset_json(const KSubset& s) {
    json arr = json::array();
    for (int e : s.elements()) arr.push_back(e);
    return arr;
}

json family_json(const Family& f) {
    json arr = json::array();
    for (const auto& s : f.members()) arr.push_back(subset_json(s));
    return arr;
}

BoundConfig bound_config(const RunConfig& rc) {
    BoundConfig cfg;
    cfg.theta = rc.theta;
    cfg.gamma = rc.gamma;
    cfg.epsilon = rc.epsilon;
    cfg.big_c = rc.big_c;
    cfg.big_k = rc.big_k;
    if (rc.zeta >= 0.0) cfg.zeta = rc.zeta;
    return cfg;
}

// Violator families, exhaustively when the class is small enough, otherwise
// `trials` uniform samples. Every family is star-sized and not a star.
template <typename Fn>
std::pair<std::string, std::uint64_t> for_each_violator(const KneserParams& params,
                                                        std::uint64_t trials,
                                                        std::uint64_t seed,
                                                        const Deadline& deadline,
                                                        Fn&& fn) {
    std::uint64_t families = 0;
    const ExactInt class_size =
        (params.vertex_count <= 64)
            ? binomial(params.vertex_count.get_ui(), params.star_size.get_ui())
            : ExactInt(-1);  // huge vertex sets always sample
    if (params.vertex_count <= 64 && class_size >= 0 && class_size <= 300'000) {
        const auto vertices = enumerate_k_subsets(params.n, params.k);
        for_each_k_subset(static_cast<int>(vertices.size()),
                          static_cast<int>(params.star_size.get_ui()),
                          [&](const KSubset& combo) {
                              std::vector<KSubset> members;
                              for (int pos : combo.elements())
                                  members.push_back(vertices[static_cast<std::size_t>(pos - 1)]);
                              Family f = family_stats(std::move(members), params);
                              if (f.is_star()) return;
                              ++families;
                              fn(f);
                          });
        return {"exhaustive", families};
    }
    SplitMix64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (t % 256 == 0) deadline.check();
        fn(random_violator(params, rng));
        ++families;
    }
    return {"sampled", families};
}

Report cmd_params(const RunConfig& rc) {
    Report rep;
    const KneserParams p = make_params(rc.n, rc.k);
    rep.results["n"] = p.n;
    rep.results["k"] = p.k;
    rep.results["c"] = p.c;
    rep.results["m"] = p.m;
    rep.results["M"] = exact_json(p.star_size);
    rep.results["N"] = exact_json(p.star_complement_size);
    rep.results["vertex_count"] = exact_json(p.vertex_count);
    rep.results["p0"] = num(p.p_zero);
    rep.rows.push_back(rep.results);
    return rep;
}

Report cmd_spectrum(const RunConfig& rc) {
    Report rep;
    const ExactInt level_size =
        binomial(static_cast<unsigned>(rc.m), static_cast<unsigned>(rc.k));
    rep.results["m"] = rc.m;
    rep.results["k"] = rc.k;
    rep.results["c"] = rc.c;
    rep.results["degree"] = exact_json(johnson_degree(rc.m, rc.k, rc.c));

    const GapFormula gap = laplacian_gap_formula(rc.m, rc.k, rc.c);
    rep.results["gap_formula"] = num(to_double(gap.value));
    rep.results["proven_regime"] = gap.proven_regime;

    // Exact gap identity lambda_0 - lambda_1 == formula (rational compare).
    const ExactInt diff = adjacency_eigenvalue(rc.m, rc.k, rc.c, 0) -
                          adjacency_eigenvalue(rc.m, rc.k, rc.c, 1);
    if (make_rational(diff, 1) != gap.value)
        rep.failures.push_back("gap identity lambda0 - lambda1 != formula");

    if (gap.proven_regime) {
        // Summand domination, exact integers.
        const ExactInt lambda1 = adjacency_eigenvalue(rc.m, rc.k, rc.c, 1);
        std::uint64_t violations = 0;
        for (int j = 2; j <= rc.k; ++j) {
            if (adjacency_eigenvalue(rc.m, rc.k, rc.c, j) > lambda1) ++violations;
            for (int i = 0; i <= std::min(j, rc.c); ++i)
                if (eigenvalue_summand(rc.m, rc.k, rc.c, j, i) > lambda1) ++violations;
        }
        rep.results["sji_violations"] = violations;
        if (violations > 0) rep.failures.push_back("S^j_i exceeds lambda_1 in the proven regime");
    }

    if (level_size <= kDenseBudget) {
        const SpectrumReport sr = spectrum_report(rc.m, rc.k, rc.c);
        rep.results["gap_numeric"] = num(sr.gap_numeric);
        rep.results["max_residual"] = num(sr.max_residual);
        json eig = json::array();
        for (int j = 0; j <= rc.k; ++j) {
            json row;
            row["j"] = j;
            row["lambda"] = exact_json(sr.formula_eigenvalues[static_cast<std::size_t>(j)]);
            row["multiplicity"] = exact_json(sr.multiplicities[static_cast<std::size_t>(j)]);
            row["residual"] = num(sr.residuals[static_cast<std::size_t>(j)]);
            eig.push_back(row);
            rep.rows.push_back(row);
        }
        rep.results["eigenvalues"] = eig;
        if (sr.max_residual > 1e-8)
            rep.failures.push_back("formula spectrum does not match the numeric oracle");
    } else {
        rep.results["gap_numeric"] = json(nullptr);  // over the dense budget
        json eig = json::array();
        for (int j = 0; j <= rc.k; ++j) {
            json row;
            row["j"] = j;
            row["lambda"] = exact_json(adjacency_eigenvalue(rc.m, rc.k, rc.c, j));
            row["multiplicity"] = exact_json(eigenvalue_multiplicity(rc.m, j));
            eig.push_back(row);
            rep.rows.push_back(row);
        }
        rep.results["eigenvalues"] = eig;
    }
    return rep;
}

Report cmd_verify_identities(const RunConfig& rc, const Deadline& deadline) {
    Report rep;
    const KneserParams params = make_params(rc.n, rc.k);
    ExactInt max_mo1 = 0, max_gle = 0, max_mo2 = 0;
    std::uint64_t contexts = 0;
    const auto [mode, families] = for_each_violator(
        params, rc.trials, rc.seed, deadline, [&](const Family& f) {
            for (int apex : f.apex_set()) {
                const ApexContext ctx = make_apex_context(f, apex, params);
                const ExactInt r1(abs(verify_mo1(ctx)));
                const ExactInt r2(abs(verify_gle(ctx)));
                const ExactInt r3(abs(verify_mo2(params.m, params.k, params.c, ctx.side_a)));
                if (r1 > max_mo1) max_mo1 = r1;
                if (r2 > max_gle) max_gle = r2;
                if (r3 > max_mo2) max_mo2 = r3;
                ++contexts;
            }
        });
    rep.results["mode"] = mode;
    rep.results["families"] = families;
    rep.results["contexts"] = contexts;
    json identities = json::array();
    for (const auto& [name, worst] :
         {std::pair<const char*, const ExactInt*>{"mo1", &max_mo1},
          {"gle", &max_gle},
          {"mo2", &max_mo2}}) {
        json row;
        row["identity"] = name;
        row["max_abs_residual"] = exact_json(*worst);
        identities.push_back(row);
        rep.rows.push_back(row);
    }
    rep.results["identities"] = identities;
    if (max_mo1 != 0) rep.failures.push_back("mo1 residual nonzero");
    if (max_gle != 0) rep.failures.push_back("gle residual nonzero");
    if (max_mo2 != 0) rep.failures.push_back("mo2 residual nonzero");
    return rep;
}

Report cmd_verify_bounds(const RunConfig& rc, const Deadline& deadline) {
    Report rep;
    const KneserParams params = make_params(rc.n, rc.k);
    const BoundConfig cfg = bound_config(rc);

    Rational min_betaprop_slack;
    Rational min_term1_slack;
    bool first_ctx = true;
    std::uint64_t betaprop_violations = 0, term1_violations = 0;
    std::uint64_t dt_applicable = 0, dt_holds = 0;
    std::uint64_t branch1 = 0, branch2 = 0, branch2_floor_violations = 0,
                  target_order_violations = 0;
    std::uint64_t contexts = 0;

    const auto [mode, families] = for_each_violator(
        params, rc.trials, rc.seed, deadline, [&](const Family& f) {
            const DtBound dt = dt_bound(params, cfg, f);
            if (dt.applicable) {
                ++dt_applicable;
                if (static_cast<double>(f.internal_edges()) > dt.bound) ++dt_holds;
            }
            for (int apex : f.apex_set()) {
                const ApexContext ctx = make_apex_context(f, apex, params);
                ++contexts;
                const Rational edges =
                    make_rational(ExactInt(static_cast<unsigned long>(f.internal_edges())), 1);

                const Rational bp_slack =
                    make_rational(lambda_into_b_complement(ctx), 1) - betaprop_bound(ctx);
                const Rational t1_slack = edges - mainobs2_bound(ctx, cfg).term1;
                if (first_ctx) {
                    min_betaprop_slack = bp_slack;
                    min_term1_slack = t1_slack;
                    first_ctx = false;
                } else {
                    min_betaprop_slack = std::min(min_betaprop_slack, bp_slack);
                    min_term1_slack = std::min(min_term1_slack, t1_slack);
                }
                if (bp_slack < 0) ++betaprop_violations;
                if (t1_slack < 0) ++term1_violations;

                const TargetReport tr = target_comparison(ctx, cfg);
                (tr.branch == 1 ? branch1 : branch2)++;
                if (!(tr.lhs < tr.rhs)) ++target_order_violations;
                if (tr.branch == 2 && !tr.branch2_ok) ++branch2_floor_violations;
            }
        });

    rep.results["mode"] = mode;
    rep.results["families"] = families;
    rep.results["contexts"] = contexts;

    json betaprop;
    betaprop["min_slack"] = num(first_ctx ? 0.0 : to_double(min_betaprop_slack));
    betaprop["violations"] = betaprop_violations;
    rep.results["betaprop"] = betaprop;
    if (betaprop_violations > 0)
        rep.failures.push_back("containment-pair proposition violated");

    json term1;
    term1["min_slack"] = num(first_ctx ? 0.0 : to_double(min_term1_slack));
    term1["violations"] = term1_violations;
    rep.results["term1"] = term1;
    if (term1_violations > 0) rep.failures.push_back("combined edge bound term1 violated");

    // Alon-Milman battery over random level subsets.
    const double am_min =
        min_alon_milman_margin(params.m, params.k, params.c, rc.trials, rc.seed + 1);
    json am;
    am["trials"] = rc.trials;
    am["min_margin"] = num(am_min);
    rep.results["alon_milman"] = am;
    if (am_min < -1e-9) rep.failures.push_back("Alon-Milman inequality violated");

    json dt;
    dt["applicable"] = dt_applicable;
    dt["holds"] = dt_holds;
    dt["zeta"] = num(cfg.effective_zeta(params));
    rep.results["das_tran"] = dt;
    if (dt_holds != dt_applicable) rep.failures.push_back("Das-Tran bound violated");

    json target;
    target["branch1"] = branch1;
    target["branch2"] = branch2;
    target["branch2_floor_violations"] = branch2_floor_violations;
    target["order_violations"] = target_order_violations;
    rep.results["target"] = target;
    if (target_order_violations > 0)
        rep.failures.push_back("target lhs/rhs ordering violated");

    // gamma calibration gate for the level actually in play.
    const double battery_min =
        calibrate_gamma({{params.m, params.k}}, std::min<std::uint64_t>(rc.trials, 200),
                        rc.seed + 2);
    json ls;
    ls["battery_min"] = num(battery_min);
    ls["gamma"] = num(cfg.gamma);
    ls["term2_gated"] = cfg.gamma <= battery_min;
    rep.results["log_sobolev"] = ls;
    if (cfg.gamma <= battery_min && branch2_floor_violations > 0)
        rep.failures.push_back("gamma-backed branch-2 floor violated under calibration");

    json row;
    row["mode"] = mode;
    row["betaprop_min_slack"] = betaprop["min_slack"];
    row["term1_min_slack"] = term1["min_slack"];
    row["am_min_margin"] = am["min_margin"];
    row["dt_applicable"] = dt_applicable;
    row["dt_holds"] = dt_holds;
    rep.rows.push_back(row);
    return rep;
}

Report cmd_theta_scan(const RunConfig& rc, const Deadline& deadline) {
    Report rep;
    const KneserParams params = make_params(rc.n, rc.k);
    deadline.check();
    ThetaScan scan;
    try {
        scan = exhaustive_theta(params);
    } catch (const ResourceError&) {
        scan = sampled_theta(params, rc.trials, rc.seed);
    }
    rep.results["mode"] = scan.exhaustive ? "exhaustive" : "sampled";
    rep.results["theta_star"] = num(scan.theta_star);
    rep.results["families"] = scan.families;
    rep.results["min_edges"] = scan.min_edges;
    rep.results["argmin"] = family_json(scan.argmin);
    rep.results["argmin_defect"] = exact_json(scan.argmin.star_defect());
    rep.results["argmin_edges"] = scan.argmin.internal_edges();
    if (!(scan.theta_star > 0.0)) rep.failures.push_back("theta_star is not positive");
    if (scan.min_edges == 0)
        rep.failures.push_back("violator family with no internal edges found");

    json row;
    row["mode"] = rep.results["mode"];
    row["theta_star"] = rep.results["theta_star"];
    row["families"] = scan.families;
    row["min_edges"] = scan.min_edges;
    rep.rows.push_back(row);
    return rep;
}

Report cmd_union_bound(const RunConfig& rc) {
    Report rep;
    const KneserParams params = make_params(rc.n, rc.k);
    const BoundConfig cfg = bound_config(rc);
    const double value = union_bound_value(params, rc.p, cfg);
    const ExactInt a_cap = (ExactInt(params.k) * params.star_complement_size) / params.n;

    rep.results["value"] = num(value);
    rep.results["xi"] = num(cfg.xi(params, rc.p));
    rep.results["a_max"] = exact_json(a_cap);
    rep.results["theta"] = num(cfg.theta);
    // Sufficient constants for the sum to vanish: epsilon < e^{-5/theta} when
    // c = 1, C > 4/theta otherwise.
    const double eps_max = std::exp(-5.0 / cfg.theta);
    const double c_min = 4.0 / cfg.theta;
    rep.results["epsilon_sufficient_max"] = num(eps_max);
    rep.results["epsilon_ok"] = cfg.epsilon < eps_max;
    rep.results["bigC_sufficient_min"] = num(c_min);
    rep.results["bigC_ok"] = cfg.big_c > c_min;
    rep.rows.push_back(rep.results);
    return rep;
}

json threshold_json(const ThresholdEstimate& est) {
    json r;
    r["mode"] = to_string(est.mode);
    r["p_hat"] = num(est.p_hat);
    r["p_lo"] = num(est.p_lo);
    r["p_hi"] = num(est.p_hi);
    r["pr_at_p_hat"] = num(est.at_p_hat.fraction);
    r["ci_lo"] = num(est.at_p_hat.ci.lo);
    r["ci_hi"] = num(est.at_p_hat.ci.hi);
    r["trials_used"] = est.trials_used;
    r["p0_reference"] = num(est.p_zero_reference);
    return r;
}

Report cmd_estimate_pc(const RunConfig& rc) {
    Report rep;
    const KneserParams params = make_params(rc.n, rc.k);
    const TrialMode mode = (rc.n <= 7) ? TrialMode::Exact : TrialMode::NearStarOnly;
    const ThresholdEstimate est = estimate_pc(params, rc.trials, rc.tol, rc.seed, mode);
    rep.results = threshold_json(est);
    rep.rows.push_back(rep.results);
    return rep;
}

Report cmd_trend(const RunConfig& rc, const Deadline& deadline) {
    Report rep;
    std::vector<int> ks;
    for (int k = 2; k <= rc.k; ++k) ks.push_back(k);
    if (ks.empty()) ks.push_back(2);
    json rows = json::array();
    for (int k : ks) {
        deadline.check();
        const auto row_list = pc_trend_report({k}, rc.trials, rc.tol, rc.seed);
        const TrendRow& tr = row_list.front();
        json row = threshold_json(tr.estimate);
        row["k"] = tr.k;
        row["n"] = tr.n;
        row["p0_reference"] = num(tr.p_zero_reference);
        rows.push_back(row);
        rep.rows.push_back(row);
    }
    rep.results["rows"] = rows;
    return rep;
}

Report cmd_near_star(const RunConfig& rc) {
    Report rep;
    const KneserParams params = make_params(rc.n, rc.k);
    const double rate = near_star_rate(params, rc.p, rc.trials, rc.seed);
    rep.results["rate"] = num(rate);
    rep.results["p"] = num(rc.p);
    rep.results["trials"] = rc.trials;

    // One sample oracle for texture: candidates inspected and hits found.
    const EdgeOracle oracle(params, rc.p, trial_seed(rc.seed, 0));
    const NearStarScan scan = near_star_scan(oracle);
    rep.results["candidates"] = scan.candidates;
    rep.results["sample_hits"] = scan.violations.size();
    rep.rows.push_back(rep.results);
    return rep;
}

std::string csv_cell(const json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char ch : s) {
                if (ch == '"') quoted += '"';
                quoted += ch;
            }
            quoted += "\"";
            return quoted;
        }
        return s;
    }
    if (v.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        return buf;
    }
    return v.dump();
}

std::string render_csv(const Report& rep) {
    std::ostringstream out;
    if (rep.rows.empty()) return "";
    std::vector<std::string> keys;
    for (auto it = rep.rows.front().begin(); it != rep.rows.front().end(); ++it)
        keys.push_back(it.key());  // nlohmann keeps object keys sorted
    for (std::size_t i = 0; i < keys.size(); ++i)
        out << (i ? "," : "") << keys[i];
    out << "\n";
    for (const auto& row : rep.rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            out << (i ? "," : "");
            if (row.contains(keys[i])) out << csv_cell(row.at(keys[i]));
        }
        out << "\n";
    }
    return out.str();
}

void render_text_value(std::ostream& out, const std::string& key, const json& v,
                       int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        out << pad << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it)
            render_text_value(out, it.key(), it.value(), indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        out << pad << key << ":\n";
        for (const auto& row : v) {
            out << pad << "  -";
            for (auto it = row.begin(); it != row.end(); ++it)
                out << " " << it.key() << "=" << csv_cell(it.value());
            out << "\n";
        }
    } else {
        out << pad << key << ": " << csv_cell(v) << "\n";
    }
}

std::string render_text(const Report& rep) {
    std::ostringstream out;
    out << "command: " << rep.command << "\n";
    for (auto it = rep.results.begin(); it != rep.results.end(); ++it)
        render_text_value(out, it.key(), it.value(), 0);
    if (rep.failures.empty()) {
        out << "failures: none\n";
    } else {
        out << "failures:\n";
        for (const auto& f : rep.failures) out << "  - " << f << "\n";
    }
    return out.str();
}

std::string render(const Report& rep, const std::string& format, double seconds) {
    if (format == "json") {
        json doc;
        doc["command"] = rep.command;
        doc["config"] = rep.config;
        doc["results"] = rep.results;
        doc["failures"] = rep.failures;
        doc["timing"] = json{{"seconds", seconds}};
        return doc.dump(2) + "\n";
    }
    if (format == "csv") return render_csv(rep);
    return render_text(rep);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    std::string command;

    CLI::App app{"Kneser-graph EKR verification toolkit"};
    app.add_option("command", command,
                   "one of: params, spectrum, verify-identities, verify-bounds, "
                   "theta-scan, union-bound, estimate-pc, trend, near-star")
        ->required();
    app.add_option("--n", rc.n, "ground-set size");
    app.add_option("--k", rc.k, "subset size (trend: largest k)");
    app.add_option("--m", rc.m, "Johnson ground-set size (spectrum)");
    app.add_option("--c", rc.c, "Johnson distance class (spectrum)");
    app.add_option("--p", rc.p, "edge probability");
    app.add_option("--theta", rc.theta, "edge lower-bound constant");
    app.add_option("--gamma", rc.gamma, "log-Sobolev constant");
    app.add_option("--epsilon", rc.epsilon, "probability margin for n = 2k+1");
    app.add_option("--bigC", rc.big_c, "threshold multiplier for n >= 2k+2");
    app.add_option("--zeta", rc.zeta, "Das-Tran zeta (negative: precondition max)");
    app.add_option("--bigK", rc.big_k, "Das-Tran constant K");
    app.add_option("--trials", rc.trials, "Monte Carlo trials / sample count");
    app.add_option("--seed", rc.seed, "master seed")->envname("EKR_SEED");
    app.add_option("--tol", rc.tol, "bisection bracket tolerance");
    app.add_option("--time-budget", rc.time_budget, "wall-clock limit in seconds (0 = off)");
    app.add_option("--output", rc.output, "write the report to this path");
    app.add_option("--format", rc.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.set_config("--config", "", "flat key=value config file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "ekrlab: " << e.what() << "\n";
        return kUsageError;
    }

    Report rep;
    const auto start = std::chrono::steady_clock::now();
    const Deadline deadline{start, rc.time_budget};
    try {
        if (command == "params") {
            rep = cmd_params(rc);
        } else if (command == "spectrum") {
            rep = cmd_spectrum(rc);
        } else if (command == "verify-identities") {
            rep = cmd_verify_identities(rc, deadline);
        } else if (command == "verify-bounds") {
            rep = cmd_verify_bounds(rc, deadline);
        } else if (command == "theta-scan") {
            rep = cmd_theta_scan(rc, deadline);
        } else if (command == "union-bound") {
            rep = cmd_union_bound(rc);
        } else if (command == "estimate-pc") {
            rep = cmd_estimate_pc(rc);
        } else if (command == "trend") {
            rep = cmd_trend(rc, deadline);
        } else if (command == "near-star") {
            rep = cmd_near_star(rc);
        } else {
            err << "ekrlab: unknown command '" << command << "'\n";
            return kUsageError;
        }
    } catch (const ResourceError& e) {
        err << "ekrlab: " << e.what() << "\n";
        return kResourceError;
    } catch (const std::exception& e) {
        err << "ekrlab: " << e.what() << "\n";
        return kUsageError;
    }

    rep.command = command;
    rep.config = json{{"n", rc.n},
                      {"k", rc.k},
                      {"m", rc.m},
                      {"c", rc.c},
                      {"p", rc.p},
                      {"theta", rc.theta},
                      {"gamma", rc.gamma},
                      {"epsilon", rc.epsilon},
                      {"bigC", rc.big_c},
                      {"zeta", rc.zeta},
                      {"bigK", rc.big_k},
                      {"trials", rc.trials},
                      {"seed", rc.seed},
                      {"tol", rc.tol},
                      {"time-budget", rc.time_budget},
                      {"format", rc.format}};

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string text = render(rep, rc.format, seconds);
    if (rc.output.empty()) {
        out << text;
    } else {
        std::ofstream file(rc.output);
        if (!file) {
            err << "ekrlab: cannot write " << rc.output << "\n";
            return kUsageError;
        }
        file << text;
        file.flush();
        if (!file) {
            err << "ekrlab: write failed for " << rc.output << "\n";
            return kUsageError;
        }
    }
    return rep.failures.empty() ? kOk : kVerificationFailure;
}

}  // namespace ekr::cli
