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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "wernerlp/chernoff.hpp"
#include "wernerlp/dense_oracle.hpp"
#include "wernerlp/ppt_lp.hpp"
#include "wernerlp/protocol_sim.hpp"
#include "wernerlp/symmetric_algebra.hpp"
#include "wernerlp/werner_core.hpp"

using namespace wernerlp;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

const std::vector<Rational> kPriors{Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(9, 10)};

Verdict exact_optimality() {
    int cases = 0;
    int max_pivots = 0;
    for (int d = 2; d <= 6; ++d) {
        for (int n = 1; n <= 20; ++n) {
            for (const auto &p : kPriors) {
                auto inst = Instance::make(d, n, p);
                auto expected = min(p * protocol_ratio(d).pow(static_cast<unsigned long>(n)), Rational(1) - p);
                auto lp = build_primal(inst);
                auto sol = simplex_solve(lp);
                auto x = locc_primal_point(inst);
                auto cert = dual_certificate(inst);
                auto dual = verify_dual_feasibility(cert, lp);
                bool ok = sol.error_probability == expected && povm_error_symmetric(x, inst) == expected &&
                          verify_primal_feasibility(x, lp).feasible && dual.feasible &&
                          error_from_objective(inst, dual_objective(cert)) == expected &&
                          optimality_gap(x, cert, lp).is_zero();
                if (!ok) {
                    std::ostringstream s;
                    s << "mismatch at d=" << d << " n=" << n << " p=" << p;
                    return {false, s.str()};
                }
                max_pivots = std::max(max_pivots, sol.iterations);
                ++cases;
            }
        }
    }
    return {true, std::to_string(cases) + " instances, zero gap, max " + std::to_string(max_pivots) + " pivots"};
}

Verdict certificate_identities() {
    int cases = 0;
    for (int d = 2; d <= 10; ++d) {
        for (int n = 1; n <= 50; ++n) {
            auto cert = dual_certificate(Instance::make(d, n, Rational(1, 2)));
            for (const auto &u : cert.u) {
                if (u < Rational(0)) {
                    return {false, "negative u at d=" + std::to_string(d) + " n=" + std::to_string(n)};
                }
            }
            for (int k = 0; k <= n; ++k) {
                if (!certificate_sum_check(d, n, k).agree()) {
                    return {false, "sum mismatch at d=" + std::to_string(d) + " n=" + std::to_string(n) +
                                       " k=" + std::to_string(k)};
                }
                ++cases;
            }
        }
    }
    return {true, std::to_string(cases) + " (d, n, k) triples exact, u >= 0"};
}

Verdict q_ground_truth() {
    int cases = 0;
    double worst_coeff = 0.0;
    double worst_residual = 0.0;
    for (int d = 2; d * d <= static_cast<int>(kDefaultDimensionCap); ++d) {
        std::size_t dim = 1;
        for (int n = 1;; ++n) {
            dim *= static_cast<std::size_t>(d * d);
            if (dim > kDefaultDimensionCap) {
                break;
            }
            auto q = q_matrix(d, n);
            if (!q.row_sums_ok()) {
                return {false, "row sums fail at d=" + std::to_string(d) + " n=" + std::to_string(n)};
            }
            auto dense = expand_all_ak_partial_transposes(d, n);
            for (int k = 0; k <= n; ++k) {
                auto exact = ak_pt_coefficients(d, n, k);
                for (int l = 0; l <= n; ++l) {
                    worst_coeff = std::max(worst_coeff, std::abs(dense[k].coefficients[l] - exact[l].to_double()));
                }
                worst_residual = std::max(worst_residual, dense[k].residual);
            }
            ++cases;
        }
    }
    std::ostringstream s;
    s << cases << " (d, n) pairs, max coefficient error " << worst_coeff << ", max residual " << worst_residual;
    return {worst_coeff <= 1e-9 && worst_residual <= 1e-9, s.str()};
}

Verdict chernoff_value() {
    double worst = 0.0;
    for (int d = 2; d <= 10; ++d) {
        auto o = outcome_distributions(d);
        auto r = classical_chernoff(o.symmetric(), o.antisymmetric());
        worst = std::max(worst, std::abs(r.value_bits - std::log2((d + 1.0) / (d - 1.0))));
    }
    auto o2 = outcome_distributions(2);
    double d2 = classical_chernoff(o2.symmetric(), o2.antisymmetric()).value_bits;
    bool quantum_inf = true;
    for (int d = 2; d <= 6; ++d) {
        quantum_inf = quantum_inf &&
                      quantum_chernoff(werner_state(d, WernerRole::symmetric), werner_state(d, WernerRole::antisymmetric))
                          .infinite;
    }
    std::ostringstream s;
    s.precision(10);
    s << "max deviation " << worst << ", d=2 value " << d2 << ", quantum distance infinite: " << (quantum_inf ? "yes" : "no");
    return {worst <= 1e-10 && std::abs(d2 - 1.5849625) < 1e-7 && quantum_inf, s.str()};
}

Verdict protocol_simulation() {
    SimulationConfig cfg;
    cfg.inst = Instance::make(2, 3, Rational(1, 2));
    cfg.trials = 1000000;
    cfg.seed = 42;
    auto r = run_protocol(cfg);
    cfg.forced_truth = ForcedTruth::antisymmetric;
    auto anti = run_protocol(cfg);
    bool band = std::abs(r.empirical_error - 1.0 / 54.0) <= 4.0 * r.sigma;
    bool one_sided = r.errors_antisymmetric == 0 && anti.errors == 0;
    std::ostringstream s;
    s << "empirical " << r.empirical_error << " vs 1/54, sigma " << r.sigma << ", z " << r.z_score
      << ", antisymmetric errors " << r.errors_antisymmetric + anti.errors;
    return {band && one_sided, s.str()};
}

Verdict bias_chain() {
    int checked = 0;
    double worst_bias_slack = 1e300;
    double worst_error_slack = 1e300;
    for (std::size_t dim : {4u, 9u, 16u}) {
        for (std::uint64_t i = 0; i < 200; ++i) {
            auto [rho1, rho2] = random_state_pair(dim, 20261018 + dim, i);
            for (double p : {0.25, 0.5}) {
                auto ball = separable_ball_povm(rho1, rho2, p);
                double bound = ball.bias_all / (2.0 * std::sqrt(static_cast<double>(dim)));
                worst_bias_slack = std::min(worst_bias_slack, ball.bias - bound);
                worst_error_slack = std::min(worst_error_slack, ball.error - helstrom(rho1, rho2, p));
                ++checked;
            }
        }
    }
    std::ostringstream s;
    s << checked << " pair/prior cases, min bias slack " << worst_bias_slack << ", min error slack "
      << worst_error_slack;
    return {worst_bias_slack >= -1e-9 && worst_error_slack >= -1e-9, s.str()};
}

Verdict norm_ratio() {
    std::ostringstream s;
    bool ok = true;
    for (int d = 2; d <= 6; ++d) {
        auto sol = simplex_solve(build_primal(Instance::make(d, 1, Rational(1, 2))));
        Rational bias = Rational(1) - Rational(2) * sol.error_probability;
        ok = ok && bias == Rational(2, d + 1);
        s << "d=" << d << ":" << bias << " ";
    }
    return {ok, s.str()};
}

Verdict twirl_equivalence() {
    double worst = 0.0;
    for (int d : {2, 3}) {
        for (int n : {1, 2}) {
            auto sigma = tensor_power(werner_state(d, WernerRole::symmetric), n);
            auto alpha = tensor_power(werner_state(d, WernerRole::antisymmetric), n);
            auto g = tensor_power(computational_povm_element(d), n);
            auto m = tensor_power(twirled_povm_element(d), n);
            for (double p : {0.1, 0.5, 0.9}) {
                worst = std::max(worst, std::abs(povm_error(sigma, alpha, p, g) - povm_error(sigma, alpha, p, m)));
            }
        }
    }
    std::ostringstream s;
    s << "max difference " << worst;
    return {worst <= 1e-12, s.str()};
}

Verdict rate_convergence() {
    double worst = 0.0;
    bool monotone = true;
    for (int d = 2; d <= 10; ++d) {
        auto rates = rate_convergence_check(d, 10000, Rational(1, 2));
        for (std::size_t i = 0; i + 1 < rates.size(); ++i) {
            monotone = monotone && rates[i + 1].rate_bits <= rates[i].rate_bits;
        }
        worst = std::max(worst, std::abs(rates.back().rate_bits - std::log2((d + 1.0) / (d - 1.0))));
    }
    std::ostringstream s;
    s << "monotone: " << (monotone ? "yes" : "no") << ", max gap at n=10000: " << worst;
    return {monotone && worst <= 1e-3, s.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        double budget_seconds;
        std::function<Verdict()> run;
    };
    std::vector<Criterion> criteria{
        {"criterion 1 exact LP optimality and zero duality gap", 60.0, exact_optimality},
        {"criterion 2 certificate sum identities and u >= 0", 30.0, certificate_identities},
        {"criterion 3 dense partial-transpose expansion matches Q", 120.0, q_ground_truth},
        {"criterion 4 Chernoff distance of the LOCC outcomes", 0.0, chernoff_value},
        {"criterion 5 protocol simulation band and one-sided errors", 30.0, protocol_simulation},
        {"criterion 6 separable-ball bias chain", 0.0, bias_chain},
        {"criterion 7 PPT versus global norm ratio 2/(d+1)", 0.0, norm_ratio},
        {"criterion 8 computational and twirled POVMs agree", 0.0, twirl_equivalence},
        {"rate sequence converges to the Chernoff limit", 0.0, rate_convergence},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = c.budget_seconds <= 0.0 || seconds <= c.budget_seconds;
        bool pass = v.pass && in_budget;
        failures += pass ? 0 : 1;
        std::printf("%s %s [%.2fs%s] %s\n", pass ? "PASS" : "FAIL", c.name, seconds,
                    in_budget ? "" : ", over budget", v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
