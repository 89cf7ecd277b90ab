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

#include <functional>
#include <optional>
#include <vector>

#include "wernerlp/errors.hpp"
#include "wernerlp/rng.hpp"
#include "wernerlp/simplex.hpp"

using namespace wernerlp;

namespace {

std::vector<Rational> row(std::initializer_list<Rational> values) { return values; }

// Exact Gaussian elimination; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(ExactMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) {
                continue;
            }
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b[i] / a[i][i];
    }
    return x;
}

// Minimum of c^T x over all basic feasible points of {A x >= b, x >= 0}.
std::optional<Rational> vertex_enumeration(const LinearProgram &lp) {
    const std::size_t nx = lp.c.size();
    ExactMatrix rows = lp.a;
    std::vector<Rational> rhs = lp.b;
    for (std::size_t k = 0; k < nx; ++k) {
        std::vector<Rational> e(nx, Rational(0));
        e[k] = Rational(1);
        rows.push_back(e);
        rhs.emplace_back(0);
    }
    std::optional<Rational> best;
    const std::size_t m = rows.size();
    std::vector<std::size_t> pick(nx);
    std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t depth, std::size_t start) {
        if (depth == nx) {
            ExactMatrix a;
            std::vector<Rational> b;
            for (auto i : pick) {
                a.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
            auto x = solve_square(a, b);
            if (!x) {
                return;
            }
            for (std::size_t i = 0; i < m; ++i) {
                Rational lhs;
                for (std::size_t k = 0; k < nx; ++k) {
                    lhs += rows[i][k] * (*x)[k];
                }
                if (lhs < rhs[i]) {
                    return;
                }
            }
            Rational value;
            for (std::size_t k = 0; k < nx; ++k) {
                value += lp.c[k] * (*x)[k];
            }
            if (!best || value < *best) {
                best = value;
            }
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            pick[depth] = i;
            recurse(depth + 1, i + 1);
        }
    };
    recurse(0, 0);
    return best;
}

void expect_feasible(const LinearProgram &lp, const std::vector<Rational> &x) {
    ASSERT_EQ(x.size(), lp.c.size());
    for (const auto &xi : x) {
        EXPECT_GE(xi, Rational(0));
    }
    for (std::size_t i = 0; i < lp.a.size(); ++i) {
        Rational lhs;
        for (std::size_t k = 0; k < x.size(); ++k) {
            lhs += lp.a[i][k] * x[k];
        }
        EXPECT_GE(lhs, lp.b[i]) << "row " << i;
    }
}

}  // namespace

TEST(Simplex, two_variable_optimum) {
    LinearProgram lp{{row({1, 2}), row({3, 1})}, {4, 6}, {1, 1}};
    auto r = solve_exact_simplex(lp);
    ASSERT_EQ(r.status, SimplexStatus::optimal);
    EXPECT_EQ(r.objective, Rational(14, 5));
    EXPECT_EQ(r.x[0], Rational(8, 5));
    EXPECT_EQ(r.x[1], Rational(6, 5));
    expect_feasible(lp, r.x);
}

TEST(Simplex, zero_start_is_optimal) {
    LinearProgram lp{{row({-1, -1})}, {-3}, {2, 5}};
    auto r = solve_exact_simplex(lp);
    ASSERT_EQ(r.status, SimplexStatus::optimal);
    EXPECT_EQ(r.objective, Rational(0));
}

TEST(Simplex, infeasible) {
    LinearProgram lp{{row({1}), row({-1})}, {2, -1}, {1}};
    EXPECT_EQ(solve_exact_simplex(lp).status, SimplexStatus::infeasible);
}

TEST(Simplex, unbounded) {
    LinearProgram lp{{row({1, -1})}, {1}, {-1, 0}};
    EXPECT_EQ(solve_exact_simplex(lp).status, SimplexStatus::unbounded);
}

TEST(Simplex, degenerate_program_terminates) {
    // A classic cycling example for the textbook largest-coefficient rule.
    LinearProgram lp{{row({Rational(-1, 4), 60, Rational(1, 25), -9}),
                      row({Rational(-1, 2), 90, Rational(1, 50), -3}),
                      row({0, 0, -1, 0})},
                     {0, 0, -1},
                     {Rational(-3, 4), 150, Rational(-1, 50), 6}};
    auto r = solve_exact_simplex(lp);
    ASSERT_EQ(r.status, SimplexStatus::optimal);
    EXPECT_EQ(r.objective, Rational(-1, 20));
    EXPECT_EQ(r.x[0], Rational(1, 25));
    EXPECT_EQ(r.x[2], Rational(1));
    expect_feasible(lp, r.x);
}

TEST(Simplex, redundant_equality_rows) {
    // x + y >= 2 and -(x + y) >= -2 pin x + y = 2; the duplicate pair is redundant.
    LinearProgram lp{{row({1, 1}), row({-1, -1}), row({1, 1}), row({-1, -1})}, {2, -2, 2, -2}, {1, 3}};
    auto r = solve_exact_simplex(lp);
    ASSERT_EQ(r.status, SimplexStatus::optimal);
    EXPECT_EQ(r.objective, Rational(2));
    expect_feasible(lp, r.x);
}

TEST(Simplex, shape_errors) {
    EXPECT_THROW(solve_exact_simplex({{row({1, 2})}, {1, 2}, {1, 1}}), DimensionMismatch);
    EXPECT_THROW(solve_exact_simplex({{row({1, 2})}, {1}, {1}}), DimensionMismatch);
}

TEST(Simplex, matches_vertex_enumeration_on_random_programs) {
    Xoshiro256 gen(20261018);
    auto small = [&](int lo, int hi) { return Rational(lo + static_cast<long>(gen.below(hi - lo + 1))); };
    int optimal = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t nx = 2 + gen.below(2);
        const std::size_t m = 2 + gen.below(3);
        LinearProgram lp;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> a(nx);
            for (auto &v : a) {
                v = small(-4, 4);
            }
            lp.a.push_back(a);
            lp.b.push_back(small(-6, 6));
        }
        // Box rows keep every program bounded.
        for (std::size_t k = 0; k < nx; ++k) {
            std::vector<Rational> a(nx, Rational(0));
            a[k] = Rational(-1);
            lp.a.push_back(a);
            lp.b.push_back(small(-5, -1));
        }
        for (std::size_t k = 0; k < nx; ++k) {
            lp.c.push_back(small(-5, 5));
        }
        auto oracle = vertex_enumeration(lp);
        auto r = solve_exact_simplex(lp);
        if (!oracle) {
            EXPECT_EQ(r.status, SimplexStatus::infeasible) << "trial " << trial;
            ++infeasible;
            continue;
        }
        ASSERT_EQ(r.status, SimplexStatus::optimal) << "trial " << trial;
        EXPECT_EQ(r.objective, *oracle) << "trial " << trial;
        expect_feasible(lp, r.x);
        ++optimal;
    }
    EXPECT_GT(optimal, 50);
    EXPECT_GT(infeasible, 5);
}
