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

#pragma once

#include <cstdint>
#include <utility>

#include "wernerlp/exact.hpp"
#include "wernerlp/rng.hpp"
#include "wernerlp/werner_core.hpp"

namespace wernerlp {

/// Test hook: pins the true state instead of drawing it with prior p.
enum class ForcedTruth { none, symmetric, antisymmetric };

struct SimulationConfig {
    Instance inst;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint64_t chunk_size = 65536;
    ForcedTruth forced_truth = ForcedTruth::none;

    void validate() const;
};

struct SimulationResult {
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    std::uint64_t errors_symmetric = 0;      // truth symmetric, guessed antisymmetric
    std::uint64_t errors_antisymmetric = 0;  // truth antisymmetric, guessed symmetric
    double empirical_error = 0.0;
    Rational closed_form_exact;
    double closed_form = 0.0;
    double sigma = 0.0;  // sqrt(P (1 - P) / trials) at the closed-form P
    double z_score = 0.0;
    double ci95_half_width = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t chunk_size = 0;
    Branch branch = Branch::protocol;

    friend bool operator==(const SimulationResult &, const SimulationResult &) = default;
};

/// Computational-basis outcome pair (i, j) of one copy of the given state.
std::pair<int, int> sample_outcome_pair(WernerRole state, int d, Xoshiro256 &gen);

/// Runs the one-way protocol: measure every copy in the computational basis
/// and guess antisymmetric iff no copy gave equal outcomes, unless guessing
/// "symmetric" blindly is strictly better. Results depend only on
/// (config, seed, chunk_size), never on `threads`.
SimulationResult run_protocol(const SimulationConfig &cfg, unsigned threads = 1);

}  // namespace wernerlp
