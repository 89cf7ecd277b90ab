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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "wernerlp/chernoff.hpp"
#include "wernerlp/errors.hpp"
#include "wernerlp/rng.hpp"

using namespace wernerlp;

namespace {

// -log2 min_s sum p^s q^(1-s) over a uniform grid of s in [0, 1].
double grid_chernoff(const std::vector<double> &p, const std::vector<double> &q, int points) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= points; ++i) {
        double s = static_cast<double>(i) / points;
        double total = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] > 0.0 && q[k] > 0.0) {
                total += std::pow(p[k], s) * std::pow(q[k], 1.0 - s);
            }
        }
        best = std::min(best, total);
    }
    return -std::log2(best);
}

std::vector<double> random_distribution(std::size_t n, Xoshiro256 &gen) {
    std::vector<double> v(n);
    double total = 0.0;
    for (auto &x : v) {
        x = gen.uniform() + 0.01;
        total += x;
    }
    for (auto &x : v) {
        x /= total;
    }
    return v;
}

}  // namespace

TEST(ClassicalChernoff, matches_grid_scan) {
    Xoshiro256 gen(2024);
    for (int trial = 0; trial < 4; ++trial) {
        std::size_t n = 2 + gen.below(4);
        auto p = random_distribution(n, gen);
        auto q = random_distribution(n, gen);
        auto r = classical_chernoff(p, q);
        ASSERT_FALSE(r.infinite);
        ASSERT_TRUE(r.s_star.has_value());
        double oracle = grid_chernoff(p, q, 1000000);
        EXPECT_NEAR(r.value_bits, oracle, 1e-10);
        EXPECT_NEAR(r.value_nats, r.value_bits * std::log(2.0), 1e-15);
    }
}

TEST(ClassicalChernoff, werner_outcomes) {
    for (int d = 2; d <= 10; ++d) {
        auto o = outcome_distributions(d);
        auto r = classical_chernoff(o.symmetric(), o.antisymmetric());
        EXPECT_NEAR(r.value_bits, std::log2((d + 1.0) / (d - 1.0)), 1e-10);
    }
    auto o = outcome_distributions(2);
    EXPECT_NEAR(classical_chernoff(o.symmetric(), o.antisymmetric()).value_bits, 1.5849625007211563, 1e-10);
}

TEST(ClassicalChernoff, edge_cases) {
    std::vector<double> a{0.5, 0.5};
    auto same = classical_chernoff(a, a);
    EXPECT_FALSE(same.infinite);
    EXPECT_EQ(same.value_bits, 0.0);
    ASSERT_TRUE(same.s_star.has_value());
    EXPECT_EQ(*same.s_star, 0.5);

    std::vector<double> left{1.0, 0.0};
    std::vector<double> right{0.0, 1.0};
    auto disjoint = classical_chernoff(left, right);
    EXPECT_TRUE(disjoint.infinite);
    EXPECT_TRUE(std::isinf(disjoint.value_bits));

    std::vector<double> three{0.5, 0.5, 0.0};
    std::vector<double> other{0.25, 0.25, 0.5};
    EXPECT_NEAR(classical_chernoff(three, other).value_bits, grid_chernoff(three, other, 100000), 1e-9);
}

TEST(ClassicalChernoff, validation) {
    std::vector<double> a{0.5, 0.5};
    std::vector<double> bad_sum{0.5, 0.4};
    std::vector<double> negative{1.5, -0.5};
    std::vector<double> shorter{1.0};
    std::vector<double> empty;
    EXPECT_THROW(classical_chernoff(a, bad_sum), InvalidArgument);
    EXPECT_THROW(classical_chernoff(a, negative), InvalidArgument);
    EXPECT_THROW(classical_chernoff(a, shorter), DimensionMismatch);
    EXPECT_THROW(classical_chernoff(empty, empty), InvalidArgument);
    EXPECT_THROW(classical_chernoff(std::vector<Rational>{Rational(1, 2), Rational(1, 3)},
                                    std::vector<Rational>{Rational(1, 2), Rational(1, 2)}),
                 InvalidArgument);
}

TEST(QuantumChernoff, commuting_states_reduce_to_classical) {
    std::vector<double> a{0.7, 0.2, 0.1};
    std::vector<double> b{0.1, 0.3, 0.6};
    auto q = quantum_chernoff(DenseSymmetric::diagonal(a), DenseSymmetric::diagonal(b));
    auto c = classical_chernoff(a, b);
    EXPECT_NEAR(q.value_bits, c.value_bits, 1e-10);
}

TEST(QuantumChernoff, werner_states_are_orthogonal) {
    for (int d = 2; d <= 4; ++d) {
        auto r = quantum_chernoff(werner_state(d, WernerRole::symmetric), werner_state(d, WernerRole::antisymmetric));
        EXPECT_TRUE(r.infinite);
    }
    auto sigma = werner_state(3, WernerRole::symmetric);
    auto same = quantum_chernoff(sigma, sigma);
    EXPECT_EQ(same.value_bits, 0.0);
    EXPECT_THROW(quantum_chernoff(sigma, werner_state(2, WernerRole::symmetric)), DimensionMismatch);
}

TEST(WernerChernoff, closed_form) {
    for (int d = 2; d <= 10; ++d) {
        auto w = ci_locc_werner(d);
        EXPECT_EQ(w.ratio, Rational(d + 1, d - 1));
        EXPECT_NEAR(w.bits, std::log2((d + 1.0) / (d - 1.0)), 1e-15);
        EXPECT_TRUE(w.agrees);
    }
}

TEST(RateConvergence, decreases_towards_limit) {
    for (int d : {2, 3, 7}) {
        auto rates = rate_convergence_check(d, 300, Rational(1, 2));
        ASSERT_EQ(rates.size(), 300u);
        double limit = std::log2((d + 1.0) / (d - 1.0));
        for (std::size_t i = 0; i + 1 < rates.size(); ++i) {
            EXPECT_GE(rates[i].rate_bits, rates[i + 1].rate_bits);
            EXPECT_GT(rates[i].rate_bits, limit);
        }
        EXPECT_NEAR(rates.back().rate_bits, limit + 1.0 / 300.0, 1e-12);
    }
    // Prior 9/10 starts in the guessing branch.
    auto rates = rate_convergence_check(2, 5, Rational(9, 10));
    EXPECT_EQ(rates.front().branch, Branch::guess);
    EXPECT_EQ(rates.back().branch, Branch::protocol);
    EXPECT_THROW(rate_convergence_check(2, 0, Rational(1, 2)), InvalidArgument);
}
