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

#include <cstddef>
#include <vector>

#include "wernerlp/exact.hpp"
#include "wernerlp/werner_core.hpp"

namespace wernerlp {

/// Row n of Pascal's triangle. Rows are computed once and cached; the
/// returned reference stays valid for the lifetime of the program.
const std::vector<BigInt> &pascal_row(int n);

/// binom(n, k), zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Integer matrix expressing the partial transposes of A_0..A_n in the
/// T_0..T_n system (without the 2^-n prefactor). Row index l, column index k.
class QMatrix {
   public:
    QMatrix(int d, int n, std::vector<std::vector<BigInt>> entries);

    int d() const { return d_; }
    int n() const { return n_; }
    std::size_t size() const { return entries_.size(); }
    const BigInt &at(int l, int k) const;
    const std::vector<std::vector<BigInt>> &rows() const { return entries_; }

    /// Every row sums to 2^n.
    bool row_sums_ok() const;

    /// Q x (exact).
    std::vector<Rational> apply(const std::vector<Rational> &x) const;
    /// Q^T y (exact).
    std::vector<Rational> apply_transpose(const std::vector<Rational> &y) const;

    friend bool operator==(const QMatrix &, const QMatrix &) = default;

   private:
    int d_;
    int n_;
    std::vector<std::vector<BigInt>> entries_;
};

/// Q_lk = sum_j binom(n-l, k-j) binom(l, j) (1-d)^j (1+d)^(l-j).
BigInt q_entry(int d, int n, int l, int k);

/// The same sum with (1+d)^j (1-d)^(l-j). Equals Q_{l, n-k}: this convention
/// counts symmetric rather than antisymmetric factors in the column index.
BigInt q_entry_swapped_signs(int d, int n, int l, int k);

QMatrix q_matrix(int d, int n);

/// Coefficients c_l with A_k^Gamma = sum_l c_l T_l, i.e. 2^-n Q_lk for l = 0..n.
std::vector<Rational> ak_pt_coefficients(int d, int n, int k);

/// Tr A_k = binom(n,k) (d(d+1)/2)^(n-k) (d(d-1)/2)^k.
BigInt ak_trace(int d, int n, int k);

/// Which of the two positivity families a violated row belongs to.
enum class PptFamily {
    element,     // (Q x)_l >= 0
    complement,  // (Q (1 - x))_l >= 0
};

struct PptViolation {
    PptFamily family;
    int row;
    Rational value;
};

struct PptReport {
    bool feasible = true;
    std::vector<Rational> element_rows;     // (Q x)_l
    std::vector<Rational> complement_rows;  // (Q (1-x))_l
    std::vector<PptViolation> violations;
};

/// Exact check that both POVM elements have positive partial transpose.
PptReport ppt_feasible(const SymmetricPovmVector &x, const QMatrix &q);

}  // namespace wernerlp
