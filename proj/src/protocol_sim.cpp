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

#include "wernerlp/protocol_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "wernerlp/errors.hpp"

namespace wernerlp {

namespace {

struct Counts {
    std::uint64_t trials = 0;
    std::uint64_t errors_symmetric = 0;
    std::uint64_t errors_antisymmetric = 0;

    Counts &operator+=(const Counts &o) {
        trials += o.trials;
        errors_symmetric += o.errors_symmetric;
        errors_antisymmetric += o.errors_antisymmetric;
        return *this;
    }
};

std::pair<int, int> unequal_pair(std::uint64_t index, int d) {
    auto i = static_cast<int>(index / static_cast<std::uint64_t>(d - 1));
    auto j = static_cast<int>(index % static_cast<std::uint64_t>(d - 1));
    return {i, j < i ? j : j + 1};
}

// Truth is symmetric iff a 53-bit uniform integer falls below ceil(p 2^53).
std::uint64_t symmetric_threshold(const Rational &p) {
    BigInt scaled = p.numerator() * pow2(53);
    BigInt threshold;
    mpz_cdiv_q(threshold.get_mpz_t(), scaled.get_mpz_t(), p.denominator().get_mpz_t());
    return threshold.get_ui();
}

struct Plan {
    int d;
    int n;
    bool measure;
    ForcedTruth forced;
    std::uint64_t threshold;
};

Counts run_chunk(const Plan &plan, std::uint64_t seed, std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
    Xoshiro256 gen(stream_seed(seed, chunk));
    Counts counts;
    for (std::uint64_t t = begin; t < end; ++t) {
        bool truth_symmetric;
        switch (plan.forced) {
            case ForcedTruth::symmetric:
                truth_symmetric = true;
                break;
            case ForcedTruth::antisymmetric:
                truth_symmetric = false;
                break;
            default:
                truth_symmetric = gen.next53() < plan.threshold;
        }
        bool guess_symmetric = true;
        if (plan.measure) {
            WernerRole role = truth_symmetric ? WernerRole::symmetric : WernerRole::antisymmetric;
            bool all_differ = true;
            for (int copy = 0; copy < plan.n; ++copy) {
                auto [i, j] = sample_outcome_pair(role, plan.d, gen);
                all_differ = all_differ && i != j;
            }
            guess_symmetric = !all_differ;
        }
        if (truth_symmetric && !guess_symmetric) {
            ++counts.errors_symmetric;
        } else if (!truth_symmetric && guess_symmetric) {
            ++counts.errors_antisymmetric;
        }
        ++counts.trials;
    }
    return counts;
}

Rational expected_error(const SimulationConfig &cfg, Branch branch) {
    Rational miss = protocol_ratio(cfg.inst.d).pow(static_cast<unsigned long>(cfg.inst.n));
    bool measure = measurement_branch(branch);
    switch (cfg.forced_truth) {
        case ForcedTruth::symmetric:
            return measure ? miss : Rational(0);
        case ForcedTruth::antisymmetric:
            return measure ? Rational(0) : Rational(1);
        default:
            return perr_closed_form(cfg.inst);
    }
}

}  // namespace

void SimulationConfig::validate() const {
    inst.validate();
    if (trials < 1) {
        throw InvalidArgument("trials must be >= 1");
    }
    if (chunk_size < 1) {
        throw InvalidArgument("chunk_size must be >= 1");
    }
}

std::pair<int, int> sample_outcome_pair(WernerRole state, int d, Xoshiro256 &gen) {
    require_dimension(d);
    const auto ud = static_cast<std::uint64_t>(d);
    if (state == WernerRole::symmetric) {
        // d(d+1) equally likely cells: each equal pair owns two, each ordered
        // unequal pair one.
        std::uint64_t m = gen.below(ud * (ud + 1));
        if (m < 2 * ud) {
            int i = static_cast<int>(m / 2);
            return {i, i};
        }
        return unequal_pair(m - 2 * ud, d);
    }
    return unequal_pair(gen.below(ud * (ud - 1)), d);
}

SimulationResult run_protocol(const SimulationConfig &cfg, unsigned threads) {
    cfg.validate();
    Branch branch = active_branch(cfg.inst);
    Plan plan{cfg.inst.d, cfg.inst.n, measurement_branch(branch), cfg.forced_truth, symmetric_threshold(cfg.inst.p)};

    const std::uint64_t chunks = (cfg.trials + cfg.chunk_size - 1) / cfg.chunk_size;
    auto chunk_counts = [&](std::uint64_t c) {
        std::uint64_t begin = c * cfg.chunk_size;
        std::uint64_t end = std::min(cfg.trials, begin + cfg.chunk_size);
        return run_chunk(plan, cfg.seed, c, begin, end);
    };

    Counts total;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(chunks, 1024))));
    if (threads == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            total += chunk_counts(c);
        }
    } else {
        std::vector<Counts> partial(threads);
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::uint64_t c = w; c < chunks; c += threads) {
                    partial[w] += chunk_counts(c);
                }
            });
        }
        for (auto &worker : workers) {
            worker.join();
        }
        for (const auto &p : partial) {
            total += p;
        }
    }

    SimulationResult r;
    r.trials = total.trials;
    r.errors_symmetric = total.errors_symmetric;
    r.errors_antisymmetric = total.errors_antisymmetric;
    r.errors = total.errors_symmetric + total.errors_antisymmetric;
    r.empirical_error = static_cast<double>(r.errors) / static_cast<double>(r.trials);
    r.closed_form_exact = expected_error(cfg, branch);
    r.closed_form = r.closed_form_exact.to_double();
    const double n_trials = static_cast<double>(r.trials);
    r.sigma = std::sqrt(r.closed_form * (1.0 - r.closed_form) / n_trials);
    const double deviation = r.empirical_error - r.closed_form;
    if (r.sigma > 0.0) {
        r.z_score = deviation / r.sigma;
    } else {
        r.z_score = deviation == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), deviation);
    }
    r.ci95_half_width = 1.96 * std::sqrt(r.empirical_error * (1.0 - r.empirical_error) / n_trials);
    r.seed = cfg.seed;
    r.chunk_size = cfg.chunk_size;
    r.branch = branch;
    return r;
}

}  // namespace wernerlp
