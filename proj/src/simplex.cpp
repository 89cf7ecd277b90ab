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

#include "wernerlp/simplex.hpp"

#include <string>

#include "wernerlp/errors.hpp"

namespace wernerlp {

namespace {

// Dense tableau. Row i reads  sum_j rows[i][j] * z_j = rhs[i]  with
// rows[i][basis[i]] = 1; cost holds the reduced costs of the current phase and
// cost_rhs the negated objective value.
class Tableau {
   public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows, std::vector<mpq_class>(cols)), rhs_(rows), cost_(cols), basis_(rows, -1) {}

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t num_cols() const { return cost_.size(); }

    mpq_class &at(std::size_t i, std::size_t j) { return rows_[i][j]; }
    mpq_class &rhs(std::size_t i) { return rhs_[i]; }
    mpq_class &cost(std::size_t j) { return cost_[j]; }
    mpq_class &cost_rhs() { return cost_rhs_; }
    std::vector<int> &basis() { return basis_; }

    // Makes the current cost row consistent with the basis by eliminating
    // basic columns.
    void price_out() {
        for (std::size_t i = 0; i < num_rows(); ++i) {
            mpq_class factor = cost_[static_cast<std::size_t>(basis_[i])];
            if (sgn(factor) != 0) {
                collect_nonzero(i);
                eliminate(cost_, cost_rhs_, i, factor);
            }
        }
    }

    // Bland: lowest-index column with negative reduced cost among allowed ones.
    int entering(std::size_t allowed_cols) const {
        for (std::size_t j = 0; j < allowed_cols; ++j) {
            if (sgn(cost_[j]) < 0) {
                return static_cast<int>(j);
            }
        }
        return -1;
    }

    // Minimum ratio test, ties broken by the lowest basic variable index.
    int leaving(std::size_t col) const {
        int best = -1;
        mpq_class best_ratio;
        for (std::size_t i = 0; i < num_rows(); ++i) {
            if (sgn(rows_[i][col]) <= 0) {
                continue;
            }
            mpq_class ratio = rhs_[i] / rows_[i][col];
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[static_cast<std::size_t>(best)])) {
                best = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t col) {
        auto &pr = rows_[row];
        mpq_class inv = 1 / pr[col];
        collect_nonzero(row);
        for (std::size_t j : nonzero_) {
            pr[j] *= inv;
        }
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < num_rows(); ++i) {
            if (i == row || sgn(rows_[i][col]) == 0) {
                continue;
            }
            mpq_class factor = rows_[i][col];
            eliminate(rows_[i], rhs_[i], row, factor);
        }
        if (sgn(cost_[col]) != 0) {
            mpq_class factor = cost_[col];
            eliminate(cost_, cost_rhs_, row, factor);
        }
        basis_[row] = static_cast<int>(col);
    }

    void drop_row(std::size_t row) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(row));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(row));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    }

   private:
    void collect_nonzero(std::size_t src) {
        nonzero_.clear();
        const auto &sr = rows_[src];
        for (std::size_t j = 0; j < sr.size(); ++j) {
            if (sgn(sr[j]) != 0) {
                nonzero_.push_back(j);
            }
        }
    }

    // target -= factor * rows_[src], touching only the columns in nonzero_.
    void eliminate(std::vector<mpq_class> &target, mpq_class &target_rhs, std::size_t src, const mpq_class &factor) {
        const auto &sr = rows_[src];
        mpq_class tmp;
        for (std::size_t j : nonzero_) {
            mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), sr[j].get_mpq_t());
            mpq_sub(target[j].get_mpq_t(), target[j].get_mpq_t(), tmp.get_mpq_t());
        }
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), rhs_[src].get_mpq_t());
        mpq_sub(target_rhs.get_mpq_t(), target_rhs.get_mpq_t(), tmp.get_mpq_t());
    }

    std::vector<std::vector<mpq_class>> rows_;
    std::vector<mpq_class> rhs_;
    std::vector<mpq_class> cost_;
    mpq_class cost_rhs_;
    std::vector<int> basis_;
    std::vector<std::size_t> nonzero_;
};

// Runs simplex iterations over columns [0, allowed_cols). Returns false if unbounded.
bool iterate(Tableau &t, std::size_t allowed_cols, int &iterations) {
    while (true) {
        int col = t.entering(allowed_cols);
        if (col < 0) {
            return true;
        }
        int row = t.leaving(static_cast<std::size_t>(col));
        if (row < 0) {
            return false;
        }
        t.pivot(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
        ++iterations;
    }
}

}  // namespace

const char *simplex_status_name(SimplexStatus s) {
    switch (s) {
        case SimplexStatus::optimal:
            return "optimal";
        case SimplexStatus::infeasible:
            return "infeasible";
        case SimplexStatus::unbounded:
            return "unbounded";
    }
    return "?";
}

SimplexResult solve_exact_simplex(const LinearProgram &lp) {
    const std::size_t m = lp.a.size();
    const std::size_t nx = lp.c.size();
    if (lp.b.size() != m) {
        throw DimensionMismatch("LP: b has length " + std::to_string(lp.b.size()) + " but A has " +
                                std::to_string(m) + " rows");
    }
    for (const auto &row : lp.a) {
        if (row.size() != nx) {
            throw DimensionMismatch("LP: every row of A must have length " + std::to_string(nx));
        }
    }

    // Rows with b_i > 0 need an artificial variable; the rest start with
    // their surplus basic after negation.
    std::vector<std::size_t> artificial_rows;
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.b[i].sign() > 0) {
            artificial_rows.push_back(i);
        }
    }
    const std::size_t real_cols = nx + m;
    Tableau t(m, real_cols + artificial_rows.size());
    std::size_t next_artificial = real_cols;
    for (std::size_t i = 0; i < m; ++i) {
        bool needs_artificial = lp.b[i].sign() > 0;
        // a_i x - s_i = b_i, or negated: -a_i x + s_i = -b_i.
        int sign = needs_artificial ? 1 : -1;
        for (std::size_t j = 0; j < nx; ++j) {
            t.at(i, j) = lp.a[i][j].raw() * sign;
        }
        t.at(i, nx + i) = -sign;
        t.rhs(i) = lp.b[i].raw() * sign;
        if (needs_artificial) {
            t.at(i, next_artificial) = 1;
            t.basis()[i] = static_cast<int>(next_artificial);
            ++next_artificial;
        } else {
            t.basis()[i] = static_cast<int>(nx + i);
        }
    }

    SimplexResult result;
    if (!artificial_rows.empty()) {
        for (std::size_t j = real_cols; j < t.num_cols(); ++j) {
            t.cost(j) = 1;
        }
        t.price_out();
        if (!iterate(t, t.num_cols(), result.iterations)) {
            throw InternalConsistencyError("phase one of the simplex method cannot be unbounded");
        }
        if (sgn(t.cost_rhs()) != 0) {
            result.status = SimplexStatus::infeasible;
            return result;
        }
        // Drive remaining zero-level artificials out of the basis.
        for (std::size_t i = 0; i < t.num_rows();) {
            if (static_cast<std::size_t>(t.basis()[i]) < real_cols) {
                ++i;
                continue;
            }
            std::size_t col = real_cols;
            for (std::size_t j = 0; j < real_cols; ++j) {
                if (sgn(t.at(i, j)) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == real_cols) {
                t.drop_row(i);  // redundant constraint
                continue;
            }
            t.pivot(i, col);
            ++result.iterations;
            ++i;
        }
        for (std::size_t j = 0; j < t.num_cols(); ++j) {
            t.cost(j) = 0;
        }
        t.cost_rhs() = 0;
    }

    for (std::size_t j = 0; j < nx; ++j) {
        t.cost(j) = lp.c[j].raw();
    }
    t.price_out();
    if (!iterate(t, real_cols, result.iterations)) {
        result.status = SimplexStatus::unbounded;
        return result;
    }

    result.status = SimplexStatus::optimal;
    result.x.assign(nx, Rational(0));
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        auto var = static_cast<std::size_t>(t.basis()[i]);
        if (var < nx) {
            result.x[var] = Rational(BigInt(t.rhs(i).get_num()), BigInt(t.rhs(i).get_den()));
        }
    }
    for (std::size_t j = 0; j < nx; ++j) {
        result.objective += lp.c[j] * result.x[j];
    }
    result.basis = t.basis();
    return result;
}

}  // namespace wernerlp
