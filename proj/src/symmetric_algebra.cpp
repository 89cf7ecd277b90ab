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

#include "wernerlp/symmetric_algebra.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>

#include "wernerlp/errors.hpp"

namespace wernerlp {

namespace {

void require_copies(int n) {
    if (n < 1) {
        throw InvalidArgument("invalid copy count n=" + std::to_string(n) + " (need n >= 1)");
    }
}

void require_index(int n, int index, const char *what) {
    if (index < 0 || index > n) {
        throw InvalidArgument(std::string(what) + "=" + std::to_string(index) + " out of range [0, " +
                              std::to_string(n) + "]");
    }
}

// Shared kernel of q_entry and q_entry_swapped_signs: the binomial sum with
// first_base^j second_base^(l-j).
BigInt double_binomial_sum(int n, int l, int k, long first_base, long second_base) {
    BigInt total = 0;
    int j_lo = std::max(0, k - (n - l));
    int j_hi = std::min(l, k);
    for (int j = j_lo; j <= j_hi; ++j) {
        total += binomial(n - l, k - j) * binomial(l, j) * ipow(first_base, static_cast<unsigned long>(j)) *
                 ipow(second_base, static_cast<unsigned long>(l - j));
    }
    return total;
}

}  // namespace

const std::vector<BigInt> &pascal_row(int n) {
    if (n < 0) {
        throw InvalidArgument("negative binomial row");
    }
    static std::mutex mutex;
    static std::deque<std::vector<BigInt>> rows{{BigInt(1)}};
    std::lock_guard<std::mutex> lock(mutex);
    while (rows.size() <= static_cast<std::size_t>(n)) {
        const auto &prev = rows.back();
        std::vector<BigInt> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t i = 1; i + 1 < next.size(); ++i) {
            next[i] = prev[i - 1] + prev[i];
        }
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(n)];
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    return pascal_row(n)[static_cast<std::size_t>(k)];
}

QMatrix::QMatrix(int d, int n, std::vector<std::vector<BigInt>> entries)
    : d_(d), n_(n), entries_(std::move(entries)) {
    require_dimension(d);
    require_copies(n);
    if (entries_.size() != static_cast<std::size_t>(n) + 1) {
        throw DimensionMismatch("Q matrix must have n+1 rows");
    }
    for (const auto &row : entries_) {
        if (row.size() != entries_.size()) {
            throw DimensionMismatch("Q matrix must be square");
        }
    }
}

const BigInt &QMatrix::at(int l, int k) const {
    require_index(n_, l, "row");
    require_index(n_, k, "column");
    return entries_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
}

bool QMatrix::row_sums_ok() const {
    BigInt expected = pow2(static_cast<unsigned long>(n_));
    for (const auto &row : entries_) {
        BigInt sum = 0;
        for (const auto &e : row) {
            sum += e;
        }
        if (sum != expected) {
            return false;
        }
    }
    return true;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational> &x) const {
    if (x.size() != size()) {
        throw DimensionMismatch("vector length " + std::to_string(x.size()) + " does not match Q of size " +
                                std::to_string(size()));
    }
    std::vector<Rational> out(size());
    for (std::size_t l = 0; l < size(); ++l) {
        for (std::size_t k = 0; k < size(); ++k) {
            if (entries_[l][k] != 0 && !x[k].is_zero()) {
                out[l] += Rational(entries_[l][k]) * x[k];
            }
        }
    }
    return out;
}

std::vector<Rational> QMatrix::apply_transpose(const std::vector<Rational> &y) const {
    if (y.size() != size()) {
        throw DimensionMismatch("vector length " + std::to_string(y.size()) + " does not match Q of size " +
                                std::to_string(size()));
    }
    std::vector<Rational> out(size());
    for (std::size_t k = 0; k < size(); ++k) {
        for (std::size_t l = 0; l < size(); ++l) {
            if (entries_[l][k] != 0 && !y[l].is_zero()) {
                out[k] += Rational(entries_[l][k]) * y[l];
            }
        }
    }
    return out;
}

BigInt q_entry(int d, int n, int l, int k) {
    require_dimension(d);
    require_copies(n);
    require_index(n, l, "row");
    require_index(n, k, "column");
    return double_binomial_sum(n, l, k, 1L - d, 1L + d);
}

BigInt q_entry_swapped_signs(int d, int n, int l, int k) {
    require_dimension(d);
    require_copies(n);
    require_index(n, l, "row");
    require_index(n, k, "column");
    return double_binomial_sum(n, l, k, 1L + d, 1L - d);
}

QMatrix q_matrix(int d, int n) {
    require_dimension(d);
    require_copies(n);
    std::vector<std::vector<BigInt>> entries(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
        auto &row = entries[static_cast<std::size_t>(l)];
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            row.push_back(double_binomial_sum(n, l, k, 1L - d, 1L + d));
        }
    }
    return QMatrix(d, n, std::move(entries));
}

std::vector<Rational> ak_pt_coefficients(int d, int n, int k) {
    require_dimension(d);
    require_copies(n);
    require_index(n, k, "k");
    Rational scale(BigInt(1), pow2(static_cast<unsigned long>(n)));
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
        coeffs.push_back(scale * Rational(q_entry(d, n, l, k)));
    }
    return coeffs;
}

BigInt ak_trace(int d, int n, int k) {
    require_dimension(d);
    require_copies(n);
    require_index(n, k, "k");
    long sym = static_cast<long>(d) * (d + 1) / 2;
    long anti = static_cast<long>(d) * (d - 1) / 2;
    return binomial(n, k) * ipow(sym, static_cast<unsigned long>(n - k)) * ipow(anti, static_cast<unsigned long>(k));
}

PptReport ppt_feasible(const SymmetricPovmVector &x, const QMatrix &q) {
    if (x.size() != q.size()) {
        throw DimensionMismatch("POVM vector has length " + std::to_string(x.size()) + ", Q has size " +
                                std::to_string(q.size()));
    }
    std::vector<Rational> complement(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        complement[k] = Rational(1) - x[k];
    }
    PptReport report;
    report.element_rows = q.apply(x.x);
    report.complement_rows = q.apply(complement);
    for (std::size_t l = 0; l < q.size(); ++l) {
        if (report.element_rows[l].sign() < 0) {
            report.violations.push_back({PptFamily::element, static_cast<int>(l), report.element_rows[l]});
        }
    }
    for (std::size_t l = 0; l < q.size(); ++l) {
        if (report.complement_rows[l].sign() < 0) {
            report.violations.push_back({PptFamily::complement, static_cast<int>(l), report.complement_rows[l]});
        }
    }
    report.feasible = report.violations.empty();
    return report;
}

}  // namespace wernerlp
