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

#include <vector>

#include "wernerlp/exact.hpp"
#include "wernerlp/simplex.hpp"
#include "wernerlp/symmetric_algebra.hpp"
#include "wernerlp/werner_core.hpp"

namespace wernerlp {

/// min c^T x s.t. P x >= b, x >= 0 with P = [Q; -Q; -I] and
/// b = (0.., -2^n.., -1..) in blocks of n+1.
struct LpStandardForm {
    ExactMatrix p;
    std::vector<Rational> b;
    std::vector<Rational> c;
    Instance instance;
    QMatrix q;

    int block_size() const { return instance.n + 1; }
    LinearProgram as_program() const { return {p, b, c}; }
};

LpStandardForm build_primal(const Instance &inst);

/// P_err(x) = (1 - p) + p c^T x.
Rational error_from_objective(const Instance &inst, const Rational &objective);

/// Dual point y = u (+) v (+) w.
struct DualCertificate {
    std::vector<Rational> u;
    std::vector<Rational> v;
    std::vector<Rational> w;

    std::vector<Rational> stacked() const;
};

struct LpSolution {
    SymmetricPovmVector x;
    Rational objective;
    Rational error_probability;
    std::vector<int> basis;
    int iterations = 0;
};

/// One exact inequality check: lhs compared to rhs, slack >= 0 iff satisfied.
struct ConstraintCheck {
    int index = 0;
    Rational lhs;
    Rational rhs;
    Rational slack;
    bool satisfied = true;
};

struct PrimalFeasibilityReport {
    bool feasible = true;
    std::vector<ConstraintCheck> rows;           // (P x)_i >= b_i
    std::vector<ConstraintCheck> nonnegativity;  // x_k >= 0
};

struct DualFeasibilityReport {
    bool feasible = true;
    std::vector<ConstraintCheck> nonnegativity;  // y_i >= 0, stacked u, v, w
    std::vector<ConstraintCheck> constraints;    // (Q^T u - Q^T v - w)_k <= c_k
    std::vector<Rational> qt_u;
    std::vector<Rational> qt_u_expected;  // delta_0k - delta_nk ((d-1)/(d+1))^n
    bool qt_u_matches = true;

    /// Feasible and Q^T u has the closed form shown for the optimal certificate.
    bool certified() const { return feasible && qt_u_matches; }
};

/// x_k = ((d-1)/(d+1))^(n-k) when measuring beats guessing (ties included),
/// otherwise the all-zeros "always guess symmetric" point.
SymmetricPovmVector locc_primal_point(const Instance &inst);

DualCertificate dual_certificate(const Instance &inst);

PrimalFeasibilityReport verify_primal_feasibility(const SymmetricPovmVector &x, const LpStandardForm &lp);

DualFeasibilityReport verify_dual_feasibility(const DualCertificate &cert, const LpStandardForm &lp);

/// -2^n sum v - sum w, where n + 1 is the block length.
Rational dual_objective(const DualCertificate &cert);

/// c^T x - b^T y. Throws InfeasibleInput if either point is infeasible.
Rational optimality_gap(const SymmetricPovmVector &x, const DualCertificate &cert, const LpStandardForm &lp);

/// Exact simplex optimum. Infeasible or unbounded outcomes are internal errors.
LpSolution simplex_solve(const LpStandardForm &lp);

/// The two sums whose difference is (Q^T u*)_k, evaluated termwise over
/// (l, j) and via their closed forms.
struct CertificateSums {
    Rational s1_termwise;
    Rational s2_termwise;
    Rational s1_closed;  // delta_0k
    Rational s2_closed;  // delta_nk ((d-1)/(d+1))^n

    bool agree() const { return s1_termwise == s1_closed && s2_termwise == s2_closed; }
};

CertificateSums certificate_sum_check(int d, int n, int k);

}  // namespace wernerlp
