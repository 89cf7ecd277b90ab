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

#include <optional>
#include <span>
#include <vector>

#include "wernerlp/dense_oracle.hpp"
#include "wernerlp/exact.hpp"
#include "wernerlp/werner_core.hpp"

namespace wernerlp {

/// -min_{0<=s<=1} log f(s). An infinite value has no minimizer.
struct ChernoffResult {
    bool infinite = false;
    double value_bits = 0.0;
    double value_nats = 0.0;
    std::optional<double> s_star;
    int evaluations = 0;
};

/// Classical Chernoff distance between two probability vectors. Terms outside
/// the joint support are dropped, which also fixes the endpoint values.
ChernoffResult classical_chernoff(std::span<const double> p, std::span<const double> q);
ChernoffResult classical_chernoff(const std::vector<Rational> &p, const std::vector<Rational> &q);

/// -min_s log Tr rho1^(1-s) rho2^s, via both eigendecompositions.
ChernoffResult quantum_chernoff(const DenseSymmetric &rho1, const DenseSymmetric &rho2);

struct WernerChernoff {
    Rational ratio;  // (d+1)/(d-1)
    double bits = 0.0;
    double nats = 0.0;
    /// Classical distance between the single-copy outcome distributions.
    double single_copy_bits = 0.0;
    bool agrees = false;  // |bits - single_copy_bits| <= 1e-12
};

/// log((d+1)/(d-1)), checked against the single-copy outcome statistics.
WernerChernoff ci_locc_werner(int d);

struct RatePoint {
    int n = 0;
    double rate_bits = 0.0;  // -(1/n) log2 Perr(n)
    Branch branch = Branch::protocol;
};

/// Finite-n error exponents of the optimal protocol for n = 1..n_max.
std::vector<RatePoint> rate_convergence_check(int d, int n_max, const Rational &p);

}  // namespace wernerlp
