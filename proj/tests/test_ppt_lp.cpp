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

#include <vector>

#include "wernerlp/errors.hpp"
#include "wernerlp/ppt_lp.hpp"
#include "wernerlp/rng.hpp"

using namespace wernerlp;

namespace {

const std::vector<Rational> kPriors{Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(9, 10)};

Rational primal_value(const SymmetricPovmVector &x, const LpStandardForm &lp) {
    Rational v;
    for (std::size_t k = 0; k < x.size(); ++k) {
        v += lp.c[k] * x[k];
    }
    return v;
}

}  // namespace

TEST(BuildPrimal, shape) {
    auto lp = build_primal(Instance::make(3, 4, Rational(1, 2)));
    EXPECT_EQ(lp.block_size(), 5);
    EXPECT_EQ(lp.p.size(), 15u);
    EXPECT_EQ(lp.b.size(), 15u);
    EXPECT_EQ(lp.c.size(), 5u);
    EXPECT_EQ(lp.c[0], Rational(1));
    EXPECT_EQ(lp.c[4], Rational(-1));
    EXPECT_EQ(lp.b[5], Rational(-16));
    EXPECT_EQ(lp.b[10], Rational(-1));
    EXPECT_EQ(lp.p[10][0], Rational(-1));
    EXPECT_EQ(lp.p[5][1], -lp.p[0][1]);
    EXPECT_THROW(build_primal(Instance{2, 0, Rational(1, 2)}), InvalidArgument);
}

TEST(BuildPrimal, objective_maps_to_error) {
    auto inst = Instance::make(2, 3, Rational(1, 4));
    auto lp = build_primal(inst);
    for (auto x : {SymmetricPovmVector::zeros(3), SymmetricPovmVector::ones(3), SymmetricPovmVector::protocol(2, 3)}) {
        EXPECT_EQ(error_from_objective(inst, primal_value(x, lp)), povm_error_symmetric(x, inst));
    }
}

TEST(SimplexSolve, equals_closed_form) {
    for (int d = 2; d <= 5; ++d) {
        for (int n = 1; n <= 10; ++n) {
            for (const auto &p : kPriors) {
                auto inst = Instance::make(d, n, p);
                auto sol = simplex_solve(build_primal(inst));
                ASSERT_EQ(sol.error_probability, perr_closed_form(inst)) << d << " " << n << " " << p;
                EXPECT_TRUE(sol.x.in_unit_box());
            }
        }
    }
}

TEST(SimplexSolve, small_known_optimum) {
    auto sol = simplex_solve(build_primal(Instance::make(2, 1, Rational(1, 2))));
    EXPECT_EQ(sol.error_probability, Rational(1, 6));
    EXPECT_EQ(sol.objective, Rational(-2, 3));
}

TEST(LoccPrimalPoint, follows_branch) {
    EXPECT_EQ(locc_primal_point(Instance::make(2, 2, Rational(1, 2))), SymmetricPovmVector::protocol(2, 2));
    EXPECT_EQ(locc_primal_point(Instance::make(2, 1, Rational(9, 10))), SymmetricPovmVector::zeros(1));
}

TEST(DualCertificate, hand_computed) {
    auto cert = dual_certificate(Instance::make(2, 2, Rational(1, 2)));
    ASSERT_EQ(cert.u.size(), 3u);
    EXPECT_EQ(cert.u[0], Rational(0));
    EXPECT_EQ(cert.u[1], Rational(1, 6));
    EXPECT_EQ(cert.u[2], Rational(1, 18));
    for (const auto &v : cert.v) {
        EXPECT_TRUE(v.is_zero());
    }
    // (1-p)/p = 1 exceeds r^2 = 1/9.
    EXPECT_EQ(cert.w[2], Rational(8, 9));
    EXPECT_EQ(cert.stacked().size(), 9u);
}

TEST(DualCertificate, feasible_and_tight_on_grid) {
    for (int d = 2; d <= 6; ++d) {
        for (int n = 1; n <= 20; ++n) {
            for (const auto &p : kPriors) {
                auto inst = Instance::make(d, n, p);
                auto lp = build_primal(inst);
                auto cert = dual_certificate(inst);
                auto dual = verify_dual_feasibility(cert, lp);
                ASSERT_TRUE(dual.certified()) << d << " " << n << " " << p;
                auto x = locc_primal_point(inst);
                ASSERT_TRUE(verify_primal_feasibility(x, lp).feasible);
                EXPECT_TRUE(optimality_gap(x, cert, lp).is_zero());
                EXPECT_EQ(error_from_objective(inst, dual_objective(cert)), perr_closed_form(inst));
            }
        }
    }
}

TEST(DualCertificate, corrupted_entry_is_detected) {
    for (int n = 1; n <= 4; ++n) {
        auto inst = Instance::make(2, n, Rational(1, 2));
        auto lp = build_primal(inst);
        auto cert = dual_certificate(inst);
        cert.u.back() = Rational(0);
        auto dual = verify_dual_feasibility(cert, lp);
        EXPECT_FALSE(dual.feasible);
        EXPECT_FALSE(dual.qt_u_matches);
        bool found = false;
        for (const auto &c : dual.constraints) {
            if (!c.satisfied) {
                found = true;
                EXPECT_LT(c.slack, Rational(0));
            }
        }
        EXPECT_TRUE(found);
        EXPECT_THROW(optimality_gap(locc_primal_point(inst), cert, lp), InfeasibleInput);
    }
}

TEST(PrimalFeasibility, detects_violations) {
    auto inst = Instance::make(2, 1, Rational(1, 2));
    auto lp = build_primal(inst);
    auto report = verify_primal_feasibility(SymmetricPovmVector{{Rational(0), Rational(1)}}, lp);
    EXPECT_FALSE(report.feasible);
    EXPECT_FALSE(report.rows[1].satisfied);
    auto negative = verify_primal_feasibility(SymmetricPovmVector{{Rational(-1, 2), Rational(0)}}, lp);
    EXPECT_FALSE(negative.feasible);
    EXPECT_FALSE(negative.nonnegativity[0].satisfied);
    EXPECT_THROW(verify_primal_feasibility(SymmetricPovmVector::zeros(3), lp), DimensionMismatch);
}

TEST(WeakDuality, holds_for_perturbed_feasible_points) {
    Xoshiro256 gen(7);
    int checked = 0;
    for (int trial = 0; checked < 100 && trial < 2000; ++trial) {
        int d = 2 + static_cast<int>(gen.below(4));
        int n = 1 + static_cast<int>(gen.below(6));
        const auto &p = kPriors[gen.below(kPriors.size())];
        auto inst = Instance::make(d, n, p);
        auto lp = build_primal(inst);
        auto cert = dual_certificate(inst);
        Rational dual = dual_objective(cert);
        // Random convex combination of three feasible points, then a small
        // random nudge; keep it only when it stays feasible.
        std::vector<SymmetricPovmVector> corners{SymmetricPovmVector::zeros(n), SymmetricPovmVector::ones(n),
                                                 SymmetricPovmVector::protocol(d, n)};
        std::vector<Rational> w(3);
        Rational total;
        for (auto &wi : w) {
            wi = Rational(static_cast<long>(gen.below(100)) + 1);
            total += wi;
        }
        SymmetricPovmVector x = SymmetricPovmVector::zeros(n);
        for (int c = 0; c < 3; ++c) {
            for (int k = 0; k <= n; ++k) {
                x.x[k] += w[c] / total * corners[c][k];
            }
        }
        for (int k = 0; k <= n; ++k) {
            x.x[k] += Rational(static_cast<long>(gen.below(21)) - 10, 1000);
        }
        if (!verify_primal_feasibility(x, lp).feasible) {
            continue;
        }
        ++checked;
        EXPECT_GE(primal_value(x, lp), dual);
        EXPECT_GE(povm_error_symmetric(x, inst), perr_closed_form(inst));
    }
    EXPECT_EQ(checked, 100);
}

TEST(CertificateSums, identities_hold) {
    for (int d = 2; d <= 6; ++d) {
        for (int n = 1; n <= 15; ++n) {
            for (int k = 0; k <= n; ++k) {
                ASSERT_TRUE(certificate_sum_check(d, n, k).agree()) << d << " " << n << " " << k;
            }
        }
    }
    auto s = certificate_sum_check(2, 2, 2);
    EXPECT_EQ(s.s2_termwise, Rational(1, 9));
    EXPECT_TRUE(s.s1_termwise.is_zero());
    EXPECT_THROW(certificate_sum_check(2, 2, 3), InvalidArgument);
}

TEST(DualObjective, validates_blocks) {
    DualCertificate bad{{Rational(0)}, {}, {Rational(0)}};
    EXPECT_THROW(dual_objective(bad), DimensionMismatch);
}
