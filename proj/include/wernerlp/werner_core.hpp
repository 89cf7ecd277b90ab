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
#include <utility>
#include <vector>

#include "wernerlp/exact.hpp"

namespace wernerlp {

/// Two-state discrimination problem: n copies of the symmetric Werner state
/// (prior p) against n copies of the antisymmetric one (prior 1 - p).
struct Instance {
    int d = 2;
    int n = 1;
    Rational p{1, 2};

    /// Builds and validates. Requires d >= 2, n >= 1, 0 < p < 1.
    static Instance make(int d, int n, Rational p);

    /// Throws InvalidArgument if the invariants do not hold.
    void validate() const;
};

void require_dimension(int d);

enum class WernerRole { symmetric, antisymmetric };

/// Describes sigma_d or alpha_d; the dense matrices themselves live in dense_oracle.
struct WernerDescriptor {
    int d = 2;
    WernerRole role = WernerRole::symmetric;

    static WernerDescriptor make(int d, WernerRole role);

    long sym_dim() const { return static_cast<long>(d) * (d + 1) / 2; }
    long anti_dim() const { return static_cast<long>(d) * (d - 1) / 2; }
    /// Rank of the described state, i.e. dimension of its support.
    long rank() const { return role == WernerRole::symmetric ? sym_dim() : anti_dim(); }
    /// Weight of the normalized projector on its subspace.
    Rational weight() const { return Rational(1, rank()); }
};

/// Coefficients of a U(x)U-invariant operator on (Pi_s, Pi_a).
struct BlockCoefficients {
    Rational sym;
    Rational anti;

    friend bool operator==(const BlockCoefficients &, const BlockCoefficients &) = default;
};

/// (d-1)/(d+1): the probability that the single-copy measurement leaves the
/// symmetric state unresolved.
Rational protocol_ratio(int d);

/// Element "outcomes differ": ((d-1)/(d+1)) Pi_s + Pi_a.
BlockCoefficients single_copy_povm_coeffs(int d);

/// Complementary element "outcomes equal": (2/(d+1)) Pi_s.
BlockCoefficients single_copy_povm_complement(int d);

/// Outcome statistics of the single-copy POVM (first outcome = "outcomes differ").
struct OutcomeDistribution {
    Rational p11, p12;  // symmetric state
    Rational p21, p22;  // antisymmetric state

    std::vector<Rational> symmetric() const { return {p11, p12}; }
    std::vector<Rational> antisymmetric() const { return {p21, p22}; }
};

OutcomeDistribution outcome_distributions(int d);

/// Which term of min(p r^n, 1 - p) is active. At equality the protocol is preferred.
enum class Branch { protocol, guess, tie };

Branch active_branch(const Instance &inst);

/// True when the optimal strategy measures every copy (protocol or tie).
inline bool measurement_branch(Branch b) { return b != Branch::guess; }

const char *branch_name(Branch b);

/// min(p ((d-1)/(d+1))^n, 1 - p).
Rational perr_closed_form(const Instance &inst);

/// Coefficients x_0..x_n of a POVM element sum_k x_k A_k over the symmetric basis.
struct SymmetricPovmVector {
    std::vector<Rational> x;

    std::size_t size() const { return x.size(); }
    const Rational &operator[](std::size_t k) const { return x[k]; }

    static SymmetricPovmVector zeros(int n);
    static SymmetricPovmVector ones(int n);
    /// x_k = ((d-1)/(d+1))^(n-k), the coefficients of M_d^{(x)n}.
    static SymmetricPovmVector protocol(int d, int n);

    /// 0 <= x_k <= 1 for all k.
    bool in_unit_box() const;
    friend bool operator==(const SymmetricPovmVector &, const SymmetricPovmVector &) = default;
};

/// Error of {sum x_k A_k, sum (1 - x_k) A_k}: (1-p) + p (x_0 - ((1-p)/p) x_n).
Rational povm_error_symmetric(const SymmetricPovmVector &x, const Instance &inst);

}  // namespace wernerlp
