// Copyright 2026 The wernerlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wernerlp/chernoff.hpp"
#include "wernerlp/dense_oracle.hpp"
#include "wernerlp/errors.hpp"
#include "wernerlp/ppt_lp.hpp"
#include "wernerlp/protocol_sim.hpp"
#include "wernerlp/symmetric_algebra.hpp"
#include "wernerlp/werner_core.hpp"

namespace wernerlp::cli {

namespace {

constexpr double kBiasSlack = 1e-9;
constexpr double kOracleTolerance = 1e-9;
constexpr double kTwirlTolerance = 1e-12;
constexpr std::size_t kSpectralDimLimit = 256;
constexpr double kSimulationZBand = 4.0;

CommandOutcome start(std::string command, Json params) {
    CommandOutcome out;
    out.command = std::move(command);
    out.params = std::move(params);
    return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json failed_checks(const std::vector<ConstraintCheck> &checks, const char *family) {
    Json out = Json::array();
    for (const auto &c : checks) {
        if (!c.satisfied) {
            out.push_back({{"family", family},
                           {"index", c.index},
                           {"lhs", c.lhs.str()},
                           {"rhs", c.rhs.str()},
                           {"slack", c.slack.str()}});
        }
    }
    return out;
}

Rational primal_value(const SymmetricPovmVector &x, const LpStandardForm &lp) {
    Rational v;
    for (std::size_t k = 0; k < x.size(); ++k) {
        v += lp.c[k] * x[k];
    }
    return v;
}

Json bias_sample(const DenseSymmetric &rho1, const DenseSymmetric &rho2, double p) {
    auto ball = separable_ball_povm(rho1, rho2, p);
    double hel = helstrom(rho1, rho2, p);
    double bound = ball.bias_all / (2.0 * std::sqrt(static_cast<double>(rho1.dim())));
    bool bias_ok = ball.bias >= bound - kBiasSlack;
    bool error_ok = ball.error >= hel - kBiasSlack;
    return {{"bias", ball.bias},
            {"bias_all", ball.bias_all},
            {"bias_bound", bound},
            {"error", ball.error},
            {"helstrom_error", hel},
            {"degenerate", ball.degenerate},
            {"bias_ok", bias_ok},
            {"error_ok", error_ok}};
}

// Raw flag values, used when a command fails before building its own echo.
Json echo_options(const CLI::App &sub) {
    Json params = Json::object();
    for (const auto *opt : sub.get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") {
            continue;
        }
        auto values = opt->results();
        std::string key = opt->get_single_name();
        if (values.size() == 1) {
            params[key] = values.front();
        } else {
            params[key] = values;
        }
    }
    return params;
}

struct CheckList {
    Json items = Json::array();
    int failed = 0;

    void add(const std::string &name, bool pass, Json detail = Json::object()) {
        detail["name"] = name;
        detail["pass"] = pass;
        items.push_back(std::move(detail));
        if (!pass) {
            ++failed;
        }
    }
};

std::size_t checked_dim(int d, int n) {
    std::size_t dim = 1;
    for (int i = 0; i < 2 * n; ++i) {
        dim *= static_cast<std::size_t>(d);
        if (dim > (std::size_t{1} << 40)) {
            break;
        }
    }
    return dim;
}

}  // namespace

const char *status_name(Status s) {
    switch (s) {
        case Status::ok:
            return "ok";
        case Status::check_failed:
            return "check-failed";
        case Status::error:
            return "error";
    }
    return "error";
}

int exit_code(Status s) {
    switch (s) {
        case Status::ok:
            return 0;
        case Status::check_failed:
            return 1;
        case Status::error:
            return 2;
    }
    return 2;
}

Json to_json(const CommandOutcome &outcome) {
    return {{"command", outcome.command},
            {"params", outcome.params},
            {"status", status_name(outcome.status)},
            {"summary", outcome.summary},
            {"results", outcome.results}};
}

CommandOutcome cmd_qmatrix(int d, int n) {
    auto out = start("qmatrix", {{"d", d}, {"n", n}});
    Instance::make(d, n, Rational(1, 2));
    auto q = q_matrix(d, n);
    out.results = wernerlp::to_json(q);
    bool ok = q.row_sums_ok();
    out.status = ok ? Status::ok : Status::check_failed;
    out.summary = "Q(d=" + std::to_string(d) + ", n=" + std::to_string(n) + ") is " + std::to_string(q.size()) + "x" +
                  std::to_string(q.size()) + ", rowSumOk=" + yes_no(ok);
    return out;
}

CommandOutcome cmd_perr(int d, int n, const std::string &p) {
    auto out = start("perr", {{"d", d}, {"n", n}, {"p", p}});
    auto inst = Instance::make(d, n, Rational::parse(p));
    auto perr = perr_closed_form(inst);
    auto branch = active_branch(inst);
    out.results = {{"perr", perr.str()},
                   {"perr_decimal", perr.to_double()},
                   {"branch", branch_name(branch)},
                   {"protocol_error", (inst.p * protocol_ratio(d).pow(static_cast<unsigned long>(n))).str()},
                   {"guess_error", (Rational(1) - inst.p).str()}};
    out.summary = "Perr = " + perr.str() + " (branch " + branch_name(branch) + ")";
    return out;
}

CommandOutcome cmd_certify(int d, int n, const std::string &p, bool corrupt_certificate) {
    auto out = start("certify", {{"d", d}, {"n", n}, {"p", p}, {"corrupt_certificate", corrupt_certificate}});
    auto inst = Instance::make(d, n, Rational::parse(p));
    auto lp = build_primal(inst);
    auto x = locc_primal_point(inst);
    auto cert = dual_certificate(inst);
    if (corrupt_certificate) {
        cert.u.back() = Rational(0);
    }
    auto primal = verify_primal_feasibility(x, lp);
    auto dual = verify_dual_feasibility(cert, lp);
    Rational pv = primal_value(x, lp);
    Rational dv = dual_objective(cert);
    Rational gap = pv - dv;
    Rational expected = perr_closed_form(inst);

    Json violations = failed_checks(dual.constraints, "dual_constraint");
    for (auto &v : failed_checks(dual.nonnegativity, "dual_nonnegativity")) {
        violations.push_back(std::move(v));
    }
    for (auto &v : failed_checks(primal.rows, "primal_row")) {
        violations.push_back(std::move(v));
    }
    for (auto &v : failed_checks(primal.nonnegativity, "primal_nonnegativity")) {
        violations.push_back(std::move(v));
    }

    bool ok = primal.feasible && dual.feasible && gap.is_zero();
    out.results = {{"primal_point", wernerlp::to_json(x)},
                   {"certificate", wernerlp::to_json(cert)},
                   {"primal_feasibility", wernerlp::to_json(primal)},
                   {"dual_feasibility", wernerlp::to_json(dual)},
                   {"primal_objective", pv.str()},
                   {"dual_objective", dv.str()},
                   {"gap", gap.str()},
                   {"primal_error", error_from_objective(inst, pv).str()},
                   {"dual_error_bound", error_from_objective(inst, dv).str()},
                   {"closed_form_error", expected.str()},
                   {"violations", violations}};
    out.status = ok ? Status::ok : Status::check_failed;
    out.summary = ok ? "certified optimal, gap " + gap.str()
                     : "certificate check failed: " + std::to_string(violations.size()) + " violated constraint(s), gap " +
                           gap.str();
    return out;
}

CommandOutcome cmd_lp_solve(int d, int n, const std::string &p) {
    auto out = start("lp-solve", {{"d", d}, {"n", n}, {"p", p}});
    auto inst = Instance::make(d, n, Rational::parse(p));
    auto lp = build_primal(inst);
    auto sol = simplex_solve(lp);
    auto expected = perr_closed_form(inst);
    bool ok = sol.error_probability == expected;
    out.results = wernerlp::to_json(sol);
    out.results["closed_form_error"] = expected.str();
    out.results["matches_closed_form"] = ok;
    out.status = ok ? Status::ok : Status::check_failed;
    out.summary = "LP optimum Perr = " + sol.error_probability.str() + " after " + std::to_string(sol.iterations) +
                  " pivots" + (ok ? "" : ", differs from closed form " + expected.str());
    return out;
}

CommandOutcome cmd_chernoff_werner(int d, int rates_n_max, const std::string &rates_p) {
    auto out = start("chernoff", {{"d", d}});
    auto w = ci_locc_werner(d);
    out.results = wernerlp::to_json(w);
    bool ok = w.agrees;
    if (rates_n_max > 0) {
        out.params["rates"] = rates_n_max;
        out.params["p"] = rates_p;
        out.results["rates"] = wernerlp::to_json(rate_convergence_check(d, rates_n_max, Rational::parse(rates_p)));
    }
    std::ostringstream s;
    s.precision(10);
    s << "C_LOCC = log2(" << w.ratio.str() << ") = " << w.bits << " bits";
    out.status = ok ? Status::ok : Status::check_failed;
    out.summary = s.str() + (ok ? "" : ", single-copy value disagrees");
    return out;
}

CommandOutcome cmd_chernoff_distributions(const std::string &first, const std::string &second) {
    auto out = start("chernoff", {{"dist_file", {first, second}}});
    auto p = distribution_from_json(read_json_file(first));
    auto q = distribution_from_json(read_json_file(second));
    auto r = classical_chernoff(p, q);
    out.results = wernerlp::to_json(r);
    out.summary = r.infinite ? "classical Chernoff distance is infinite"
                             : "classical Chernoff distance " + std::to_string(r.value_bits) + " bits";
    return out;
}

CommandOutcome cmd_chernoff_states(const std::string &first, const std::string &second) {
    auto out = start("chernoff", {{"state_file", {first, second}}});
    auto rho1 = density_matrix_from_json(read_json_file(first));
    auto rho2 = density_matrix_from_json(read_json_file(second));
    auto r = quantum_chernoff(rho1.rho, rho2.rho);
    out.results = wernerlp::to_json(r);
    out.summary = r.infinite ? "quantum Chernoff distance is infinite"
                             : "quantum Chernoff distance " + std::to_string(r.value_bits) + " bits";
    return out;
}

CommandOutcome cmd_simulate(int d, int n, const std::string &p, std::uint64_t trials, std::uint64_t seed,
                            std::uint64_t chunk_size, unsigned threads) {
    auto out = start("simulate",
                       {{"d", d}, {"n", n}, {"p", p}, {"trials", trials}, {"seed", seed}, {"chunk_size", chunk_size}});
    SimulationConfig cfg{Instance::make(d, n, Rational::parse(p)), trials, seed, chunk_size};
    auto r = run_protocol(cfg, threads);
    bool one_sided = !measurement_branch(r.branch) || r.errors_antisymmetric == 0;
    bool in_band = std::abs(r.z_score) <= kSimulationZBand;
    out.results = wernerlp::to_json(r);
    out.results["one_sided_errors"] = one_sided;
    out.results["within_4_sigma"] = in_band;
    out.status = one_sided && in_band ? Status::ok : Status::check_failed;
    std::ostringstream s;
    s.precision(6);
    s << "empirical " << r.empirical_error << " vs closed form " << r.closed_form << " (z = " << r.z_score << ")";
    out.summary = s.str();
    return out;
}

CommandOutcome cmd_bias_bound_files(const std::string &first, const std::string &second, const std::string &p) {
    auto out = start("bias-bound", {{"state_file", {first, second}}, {"p", p}});
    double prior = Rational::parse(p).to_double();
    auto rho1 = density_matrix_from_json(read_json_file(first));
    auto rho2 = density_matrix_from_json(read_json_file(second));
    auto sample = bias_sample(rho1.rho, rho2.rho, prior);
    bool ok = sample["bias_ok"].get<bool>() && sample["error_ok"].get<bool>();
    out.results = sample;
    out.status = ok ? Status::ok : Status::check_failed;
    out.summary = "separable-ball bias " + std::to_string(sample["bias"].get<double>()) + " vs bound " +
                  std::to_string(sample["bias_bound"].get<double>());
    return out;
}

CommandOutcome cmd_bias_bound_random(std::size_t dim, std::size_t samples, std::uint64_t seed, const std::string &p) {
    auto out = start("bias-bound", {{"random", true}, {"dim", dim}, {"samples", samples}, {"seed", seed}, {"p", p}});
    double prior = Rational::parse(p).to_double();
    if (dim < 2) {
        throw InvalidArgument("--dim must be at least 2");
    }
    if (dim > kDefaultDimensionCap) {
        throw SizeLimitExceeded("--dim exceeds the dense cap of " + std::to_string(kDefaultDimensionCap));
    }
    Json list = Json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        auto [rho1, rho2] = random_state_pair(dim, seed, i);
        auto sample = bias_sample(rho1, rho2, prior);
        sample["index"] = i;
        if (sample["bias_ok"].get<bool>() && sample["error_ok"].get<bool>()) {
            ++passed;
        }
        list.push_back(std::move(sample));
    }
    out.results = {{"samples", list}, {"passed", passed}, {"total", samples}};
    out.status = passed == samples ? Status::ok : Status::check_failed;
    out.summary = std::to_string(passed) + "/" + std::to_string(samples) + " samples satisfy the separable-ball bounds";
    return out;
}

CommandOutcome cmd_oracle_verify(int d, int n, std::size_t cap) {
    auto out = start("oracle-verify", {{"d", d}, {"n", n}, {"cap", cap}});
    Instance::make(d, n, Rational(1, 2));
    const std::size_t dim = checked_dim(d, n);
    if (dim > cap) {
        throw SizeLimitExceeded("d^(2n) = " + std::to_string(dim) + " exceeds the dense cap " + std::to_string(cap));
    }
    CheckList checks;

    auto q = q_matrix(d, n);
    checks.add("q_row_sums", q.row_sums_ok());

    bool swapped = true;
    for (int l = 0; l <= n; ++l) {
        for (int k = 0; k <= n; ++k) {
            swapped = swapped && q_entry_swapped_signs(d, n, l, k) == q.at(l, n - k);
        }
    }
    checks.add("swapped_sign_convention_is_column_reversal", swapped);

    auto expansions = expand_all_ak_partial_transposes(d, n, cap);
    double max_coeff = 0.0;
    double max_residual = 0.0;
    for (int k = 0; k <= n; ++k) {
        auto exact = ak_pt_coefficients(d, n, k);
        for (int l = 0; l <= n; ++l) {
            max_coeff = std::max(max_coeff, std::abs(expansions[k].coefficients[l] - exact[l].to_double()));
        }
        max_residual = std::max(max_residual, expansions[k].residual);
    }
    checks.add("ak_partial_transpose_expansion", max_coeff <= kOracleTolerance && max_residual <= kOracleTolerance,
               {{"max_coefficient_error", max_coeff}, {"max_residual", max_residual}});

    double max_trace = 0.0;
    DenseSymmetric sum(dim);
    for (int k = 0; k <= n; ++k) {
        auto ak = build_ak(d, n, k, cap);
        max_trace = std::max(max_trace, std::abs(ak.trace() - ak_trace(d, n, k).get_d()));
        sum += ak;
    }
    double resolution = max_abs_difference(sum, DenseSymmetric::identity(dim));
    checks.add("ak_traces", max_trace <= kOracleTolerance, {{"max_error", max_trace}});
    checks.add("ak_resolve_identity", resolution <= kOracleTolerance, {{"max_error", resolution}});

    auto dist = outcome_distributions(d);
    auto sigma1 = werner_state(d, WernerRole::symmetric);
    auto alpha1 = werner_state(d, WernerRole::antisymmetric);
    auto g1 = computational_povm_element(d);
    // Outcome 1 is the element G_d, outcome 2 its complement.
    double dist_err = std::max({std::abs(trace_product(g1, sigma1) - dist.p11.to_double()),
                                std::abs(trace_product(g1, alpha1) - dist.p21.to_double()),
                                std::abs(sigma1.trace() - trace_product(g1, sigma1) - dist.p12.to_double()),
                                std::abs(alpha1.trace() - trace_product(g1, alpha1) - dist.p22.to_double())});
    checks.add("single_copy_outcome_distributions", dist_err <= kOracleTolerance, {{"max_error", dist_err}});

    auto [gs, ga] = twirl_block_coefficients(g1, d);
    auto coeffs = single_copy_povm_coeffs(d);
    double twirl_coeff_err = std::max(std::abs(gs - coeffs.sym.to_double()), std::abs(ga - coeffs.anti.to_double()));
    checks.add("twirl_block_coefficients", twirl_coeff_err <= kOracleTolerance, {{"max_error", twirl_coeff_err}});

    if (dim <= kSpectralDimLimit) {
        auto sigma = tensor_power(sigma1, n, cap);
        auto alpha = tensor_power(alpha1, n, cap);
        auto g = tensor_power(g1, n, cap);
        auto m = tensor_power(twirled_povm_element(d), n, cap);
        const double p = 0.5;
        double eg = povm_error(sigma, alpha, p, g);
        double em = povm_error(sigma, alpha, p, m);
        double closed = perr_closed_form(Instance::make(d, n, Rational(1, 2))).to_double();
        checks.add("twirl_equivalence", std::abs(eg - em) <= kTwirlTolerance,
                   {{"computational_error", eg}, {"twirled_error", em}});
        checks.add("protocol_error_matches_closed_form", std::abs(eg - closed) <= kOracleTolerance,
                   {{"dense", eg}, {"closed_form", closed}});
        double hel = helstrom(sigma, alpha, p);
        checks.add("global_helstrom_is_zero", std::abs(hel) <= kOracleTolerance, {{"helstrom_error", hel}});
    } else {
        out.results["skipped"] = Json::array({"twirl_equivalence", "protocol_error_matches_closed_form",
                                              "global_helstrom_is_zero"});
    }

    out.results["checks"] = checks.items;
    out.results["failed"] = checks.failed;
    out.status = checks.failed == 0 ? Status::ok : Status::check_failed;
    out.summary = std::to_string(checks.items.size() - static_cast<std::size_t>(checks.failed)) + "/" +
                  std::to_string(checks.items.size()) + " oracle checks passed";
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        std::optional<unsigned> env_threads) {
    CLI::App app{"Exact and dense-oracle tools for Werner state discrimination", "wernerlp"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    int d = 0;
    int n = 0;
    std::string p = "1/2";
    std::string format = "json";
    bool corrupt = false;
    int rates = 0;
    std::vector<std::string> dist_files;
    std::vector<std::string> state_files;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 0;
    std::uint64_t chunk_size = 65536;
    unsigned threads = 1;
    bool random = false;
    std::size_t dim = 0;
    std::size_t samples = 0;
    std::size_t cap = kDefaultDimensionCap;
    std::string command_name;
    std::function<CommandOutcome()> action;

    auto add_dn = [&](CLI::App *sub) {
        sub->add_option("--d", d, "Local dimension (d >= 2)")->required();
        sub->add_option("--n", n, "Number of copies (n >= 1)")->required();
    };
    auto add_dnp = [&](CLI::App *sub) {
        add_dn(sub);
        sub->add_option("--p", p, "Prior of the symmetric state, num/den")->required();
    };

    auto *qm = app.add_subcommand("qmatrix", "Emit the integer Q matrix");
    add_dn(qm);
    qm->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    qm->callback([&] { action = [&] { return cmd_qmatrix(d, n); }; });

    auto *pe = app.add_subcommand("perr", "Exact optimal PPT error probability");
    add_dnp(pe);
    pe->callback([&] { action = [&] { return cmd_perr(d, n, p); }; });

    auto *ce = app.add_subcommand("certify", "Check the primal point and dual certificate exactly");
    add_dnp(ce);
    ce->add_flag("--corrupt-certificate", corrupt, "Zero the last u entry before checking (test hook)");
    ce->callback([&] { action = [&] { return cmd_certify(d, n, p, corrupt); }; });

    auto *ls = app.add_subcommand("lp-solve", "Solve the PPT LP with the exact simplex");
    add_dnp(ls);
    ls->callback([&] { action = [&] { return cmd_lp_solve(d, n, p); }; });

    auto *ch = app.add_subcommand("chernoff", "Chernoff distances");
    auto *ch_d = ch->add_option("--d", d, "Werner dimension");
    auto *ch_rates = ch->add_option("--rates", rates, "Also emit -(1/n) log2 Perr for n = 1..N");
    ch->add_option("--p", p, "Prior used for --rates, num/den");
    auto *ch_dist = ch->add_option("--dist-file", dist_files, "Two distribution JSON files");
    auto *ch_state = ch->add_option("--state-file", state_files, "Two density matrix JSON files");
    ch_d->excludes(ch_dist)->excludes(ch_state);
    ch_dist->excludes(ch_state);
    ch_rates->needs(ch_d);
    ch->callback([&] {
        if (ch_d->count() > 0) {
            action = [&] { return cmd_chernoff_werner(d, rates, p); };
        } else if (!dist_files.empty()) {
            if (dist_files.size() != 2) {
                throw CLI::ValidationError("--dist-file", "expects exactly two files");
            }
            action = [&] { return cmd_chernoff_distributions(dist_files[0], dist_files[1]); };
        } else if (!state_files.empty()) {
            if (state_files.size() != 2) {
                throw CLI::ValidationError("--state-file", "expects exactly two files");
            }
            action = [&] { return cmd_chernoff_states(state_files[0], state_files[1]); };
        } else {
            throw CLI::RequiredError("one of --d, --dist-file or --state-file");
        }
    });

    auto *si = app.add_subcommand("simulate", "Monte Carlo run of the LOCC protocol");
    add_dnp(si);
    si->add_option("--trials", trials, "Number of trials");
    si->add_option("--seed", seed, "Master seed");
    si->add_option("--chunk-size", chunk_size, "Trials per RNG stream");
    auto *si_threads = si->add_option("--threads", threads, "Worker threads (THREADS also accepted)");
    si->callback([&] {
        if (si_threads->count() == 0 && env_threads) {
            threads = *env_threads;
        }
        action = [&] { return cmd_simulate(d, n, p, trials, seed, chunk_size, threads); };
    });

    auto *bb = app.add_subcommand("bias-bound", "Separable-ball POVM bias versus the global bias");
    auto *bb_state = bb->add_option("--state-file", state_files, "Two density matrix JSON files");
    bb->add_option("--p", p, "Prior of the first state, num/den");
    auto *bb_random = bb->add_flag("--random", random, "Use seeded random state pairs");
    auto *bb_dim = bb->add_option("--dim", dim, "Dimension of random states");
    auto *bb_samples = bb->add_option("--samples", samples, "Number of random pairs");
    auto *bb_seed = bb->add_option("--seed", seed, "Master seed");
    bb_state->excludes(bb_random);
    bb_dim->needs(bb_random);
    bb_samples->needs(bb_random);
    bb_seed->needs(bb_random);
    bb->callback([&] {
        if (random) {
            if (bb_dim->count() == 0 || bb_samples->count() == 0) {
                throw CLI::RequiredError("--dim and --samples");
            }
            action = [&] { return cmd_bias_bound_random(dim, samples, seed, p); };
        } else {
            if (state_files.size() != 2) {
                throw CLI::ValidationError("--state-file", "expects exactly two files");
            }
            action = [&] { return cmd_bias_bound_files(state_files[0], state_files[1], p); };
        }
    });

    auto *ov = app.add_subcommand("oracle-verify", "Compare the exact algebra with dense matrices");
    add_dn(ov);
    ov->add_option("--cap", cap, "Largest dense dimension allowed");
    ov->callback([&] { action = [&] { return cmd_oracle_verify(d, n, cap); }; });

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("wernerlp");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    CommandOutcome outcome;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        outcome.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
        outcome.status = Status::error;
        outcome.summary = std::string("usage error: ") + e.what();
        err << outcome.summary << "\n";
        out << to_json(outcome).dump(2) << "\n";
        return exit_code(outcome.status);
    }
    command_name = app.get_subcommands().front()->get_name();

    try {
        outcome = action();
    } catch (const std::exception &e) {
        outcome = CommandOutcome{};
        outcome.command = command_name;
        outcome.params = echo_options(*app.get_subcommands().front());
        outcome.status = Status::error;
        outcome.summary = e.what();
        err << "error: " << e.what() << "\n";
    }

    if (command_name == "qmatrix" && format == "csv" && outcome.status != Status::error) {
        out << to_csv(qmatrix_from_json(outcome.results));
        err << "rowSumOk=" << yes_no(outcome.results.value("rowSumOk", false)) << "\n";
    } else {
        out << to_json(outcome).dump(2) << "\n";
    }
    if (outcome.status == Status::check_failed) {
        err << outcome.summary << "\n";
    }
    return exit_code(outcome.status);
}

}  // namespace wernerlp::cli
