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

#include "wernerlp/ppt_lp.hpp"

#include <string>

#include "wernerlp/errors.hpp"

namespace wernerlp {

namespace {

void require_block(const std::vector<Rational> &v, std::size_t size, const char *name) {
    if (v.size() != size) {
        throw DimensionMismatch(std::string(name) + " has length " + std::to_string(v.size()) + ", expected " +
                                std::to_string(size));
    }
}

ConstraintCheck at_least(int index, Rational lhs, Rational rhs) {
    Rational slack = lhs - rhs;
    bool ok = slack.sign() >= 0;
    return {index, std::move(lhs), std::move(rhs), std::move(slack), ok};
}

ConstraintCheck at_most(int index, Rational lhs, Rational rhs) {
    Rational slack = rhs - lhs;
    bool ok = slack.sign() >= 0;
    return {index, std::move(lhs), std::move(rhs), std::move(slack), ok};
}

}  // namespace

LpStandardForm build_primal(const Instance &inst) {
    inst.validate();
    QMatrix q = q_matrix(inst.d, inst.n);
    const auto size = static_cast<std::size_t>(inst.n) + 1;

    ExactMatrix p(3 * size, std::vector<Rational>(size));
    std::vector<Rational> b(3 * size);
    Rational two_n(pow2(static_cast<unsigned long>(inst.n)));
    for (std::size_t l = 0; l < size; ++l) {
        for (std::size_t k = 0; k < size; ++k) {
            Rational e(q.rows()[l][k]);
            p[l][k] = e;
            p[size + l][k] = -e;
        }
        p[2 * size + l][l] = Rational(-1);
        b[l] = Rational(0);
        b[size + l] = -two_n;
        b[2 * size + l] = Rational(-1);
    }

    std::vector<Rational> c(size, Rational(0));
    c.front() = Rational(1);
    c.back() -= (Rational(1) - inst.p) / inst.p;
    return LpStandardForm{std::move(p), std::move(b), std::move(c), inst, std::move(q)};
}

Rational error_from_objective(const Instance &inst, const Rational &objective) {
    return (Rational(1) - inst.p) + inst.p * objective;
}

std::vector<Rational> DualCertificate::stacked() const {
    std::vector<Rational> y;
    y.reserve(u.size() + v.size() + w.size());
    y.insert(y.end(), u.begin(), u.end());
    y.insert(y.end(), v.begin(), v.end());
    y.insert(y.end(), w.begin(), w.end());
    return y;
}

SymmetricPovmVector locc_primal_point(const Instance &inst) {
    if (measurement_branch(active_branch(inst))) {
        return SymmetricPovmVector::protocol(inst.d, inst.n);
    }
    return SymmetricPovmVector::zeros(inst.n);
}

DualCertificate dual_certificate(const Instance &inst) {
    inst.validate();
    const int d = inst.d;
    const int n = inst.n;
    const auto size = static_cast<std::size_t>(n) + 1;
    DualCertificate cert;
    cert.u.reserve(size);
    BigInt denominator_base = ipow(2L * d, static_cast<unsigned long>(n));
    for (int i = 0; i <= n; ++i) {
        auto ui = static_cast<unsigned long>(i);
        BigInt num = binomial(n, i) * ipow(d - 1, static_cast<unsigned long>(n - i)) *
                     (ipow(d + 1, ui) - ipow(1L - d, ui));
        BigInt den = denominator_base * ipow(d + 1, ui);
        cert.u.emplace_back(num, den);
    }
    cert.v.assign(size, Rational(0));
    cert.w.assign(size, Rational(0));
    Rational r_n = protocol_ratio(d).pow(static_cast<unsigned long>(n));
    cert.w.back() = max((Rational(1) - inst.p) / inst.p - r_n, Rational(0));
    return cert;
}

PrimalFeasibilityReport verify_primal_feasibility(const SymmetricPovmVector &x, const LpStandardForm &lp) {
    require_block(x.x, lp.c.size(), "primal point");
    PrimalFeasibilityReport report;
    for (std::size_t i = 0; i < lp.p.size(); ++i) {
        Rational lhs;
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (!lp.p[i][k].is_zero()) {
                lhs += lp.p[i][k] * x[k];
            }
        }
        report.rows.push_back(at_least(static_cast<int>(i), std::move(lhs), lp.b[i]));
        report.feasible = report.feasible && report.rows.back().satisfied;
    }
    for (std::size_t k = 0; k < x.size(); ++k) {
        report.nonnegativity.push_back(at_least(static_cast<int>(k), x[k], Rational(0)));
        report.feasible = report.feasible && report.nonnegativity.back().satisfied;
    }
    return report;
}

DualFeasibilityReport verify_dual_feasibility(const DualCertificate &cert, const LpStandardForm &lp) {
    const auto size = static_cast<std::size_t>(lp.block_size());
    require_block(cert.u, size, "u");
    require_block(cert.v, size, "v");
    require_block(cert.w, size, "w");

    DualFeasibilityReport report;
    auto y = cert.stacked();
    for (std::size_t i = 0; i < y.size(); ++i) {
        report.nonnegativity.push_back(at_least(static_cast<int>(i), y[i], Rational(0)));
        report.feasible = report.feasible && report.nonnegativity.back().satisfied;
    }

    report.qt_u = lp.q.apply_transpose(cert.u);
    auto qt_v = lp.q.apply_transpose(cert.v);
    for (std::size_t k = 0; k < size; ++k) {
        Rational lhs = report.qt_u[k] - qt_v[k] - cert.w[k];
        report.constraints.push_back(at_most(static_cast<int>(k), std::move(lhs), lp.c[k]));
        report.feasible = report.feasible && report.constraints.back().satisfied;
    }

    report.qt_u_expected.assign(size, Rational(0));
    report.qt_u_expected.front() += Rational(1);
    report.qt_u_expected.back() -= protocol_ratio(lp.instance.d).pow(static_cast<unsigned long>(lp.instance.n));
    report.qt_u_matches = report.qt_u == report.qt_u_expected;
    return report;
}

Rational dual_objective(const DualCertificate &cert) {
    if (cert.u.empty() || cert.v.size() != cert.u.size() || cert.w.size() != cert.u.size()) {
        throw DimensionMismatch("certificate blocks must be non-empty and of equal length");
    }
    Rational two_n(pow2(static_cast<unsigned long>(cert.v.size() - 1)));
    Rational sum_v;
    Rational sum_w;
    for (const auto &vi : cert.v) {
        sum_v += vi;
    }
    for (const auto &wi : cert.w) {
        sum_w += wi;
    }
    return -two_n * sum_v - sum_w;
}

Rational optimality_gap(const SymmetricPovmVector &x, const DualCertificate &cert, const LpStandardForm &lp) {
    auto primal = verify_primal_feasibility(x, lp);
    if (!primal.feasible) {
        throw InfeasibleInput("optimality gap: primal point is infeasible");
    }
    auto dual = verify_dual_feasibility(cert, lp);
    if (!dual.feasible) {
        throw InfeasibleInput("optimality gap: dual certificate is infeasible");
    }
    Rational primal_value;
    for (std::size_t k = 0; k < x.size(); ++k) {
        primal_value += lp.c[k] * x[k];
    }
    auto y = cert.stacked();
    Rational dual_value;
    for (std::size_t i = 0; i < y.size(); ++i) {
        dual_value += lp.b[i] * y[i];
    }
    return primal_value - dual_value;
}

LpSolution simplex_solve(const LpStandardForm &lp) {
    SimplexResult r = solve_exact_simplex(lp.as_program());
    if (r.status != SimplexStatus::optimal) {
        throw InternalConsistencyError(std::string("simplex reported ") + simplex_status_name(r.status) +
                                       " for a program that is feasible (x = 0) and bounded (x <= 1)");
    }
    LpSolution solution;
    solution.x = SymmetricPovmVector{std::move(r.x)};
    solution.objective = r.objective;
    solution.error_probability = error_from_objective(lp.instance, r.objective);
    solution.basis = std::move(r.basis);
    solution.iterations = r.iterations;
    if (!verify_primal_feasibility(solution.x, lp).feasible) {
        throw InternalConsistencyError("simplex returned an infeasible point");
    }
    return solution;
}

CertificateSums certificate_sum_check(int d, int n, int k) {
    require_dimension(d);
    if (n < 1) {
        throw InvalidArgument("invalid copy count n=" + std::to_string(n));
    }
    if (k < 0 || k > n) {
        throw InvalidArgument("k=" + std::to_string(k) + " out of range [0, " + std::to_string(n) + "]");
    }
    // s1 = (d-1)^n/(2d)^n sum_{l,j} B (1-d)^j (1+d)^(l-j) (d+1)^l / ((d-1)^l (d+1)^l)
    // s2 = (d-1)^n/(2d)^n sum_{l,j} B (1-d)^j (1+d)^(l-j) (1-d)^l / ((d-1)^l (d+1)^l)
    // with B = binom(n-l, k-j) binom(l, j) binom(n, l). Both are accumulated as
    // integers over the common denominators (2d)^n and (2d)^n (d+1)^n.
    BigInt s1_num = 0;
    BigInt s2_num = 0;
    for (int l = 0; l <= n; ++l) {
        auto ul = static_cast<unsigned long>(l);
        auto rest = static_cast<unsigned long>(n - l);
        BigInt s1_factor = ipow(d - 1, rest);
        BigInt s2_factor = ipow(1L - d, ul) * ipow(d - 1, rest) * ipow(d + 1, rest);
        for (int j = 0; j <= l && j <= k; ++j) {
            BigInt b = binomial(n - l, k - j);
            if (b == 0) {
                continue;
            }
            BigInt term = b * binomial(l, j) * binomial(n, l) * ipow(1L - d, static_cast<unsigned long>(j)) *
                          ipow(1L + d, static_cast<unsigned long>(l - j));
            s1_num += term * s1_factor;
            s2_num += term * s2_factor;
        }
    }
    BigInt two_d_n = ipow(2L * d, static_cast<unsigned long>(n));
    CertificateSums sums;
    sums.s1_termwise = Rational(s1_num, two_d_n);
    sums.s2_termwise = Rational(s2_num, two_d_n * ipow(d + 1, static_cast<unsigned long>(n)));
    sums.s1_closed = Rational(k == 0 ? 1 : 0);
    sums.s2_closed = k == n ? protocol_ratio(d).pow(static_cast<unsigned long>(n)) : Rational(0);
    return sums;
}

}  // namespace wernerlp
