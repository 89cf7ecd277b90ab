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

#include "wernerlp/werner_core.hpp"

#include <string>

#include "wernerlp/errors.hpp"

namespace wernerlp {

void require_dimension(int d) {
    if (d < 2) {
        throw InvalidArgument("invalid dimension d=" + std::to_string(d) + " (need d >= 2)");
    }
}

Instance Instance::make(int d, int n, Rational p) {
    Instance inst{d, n, std::move(p)};
    inst.validate();
    return inst;
}

void Instance::validate() const {
    require_dimension(d);
    if (n < 1) {
        throw InvalidArgument("invalid copy count n=" + std::to_string(n) + " (need n >= 1)");
    }
    if (p.sign() <= 0 || p >= Rational(1)) {
        throw InvalidArgument("prior p=" + p.str() + " must satisfy 0 < p < 1");
    }
}

WernerDescriptor WernerDescriptor::make(int d, WernerRole role) {
    require_dimension(d);
    return WernerDescriptor{d, role};
}

Rational protocol_ratio(int d) {
    require_dimension(d);
    return Rational(d - 1, d + 1);
}

BlockCoefficients single_copy_povm_coeffs(int d) { return {protocol_ratio(d), Rational(1)}; }

BlockCoefficients single_copy_povm_complement(int d) {
    require_dimension(d);
    return {Rational(2, d + 1), Rational(0)};
}

OutcomeDistribution outcome_distributions(int d) {
    // sigma_d is supported on the symmetric block, alpha_d on the antisymmetric
    // one, so Tr(M sigma) and Tr(M alpha) are the block coefficients of M.
    BlockCoefficients m = single_copy_povm_coeffs(d);
    BlockCoefficients rest = single_copy_povm_complement(d);
    return {m.sym, rest.sym, m.anti, rest.anti};
}

Branch active_branch(const Instance &inst) {
    inst.validate();
    Rational protocol_error = inst.p * protocol_ratio(inst.d).pow(inst.n);
    Rational guess_error = Rational(1) - inst.p;
    if (protocol_error < guess_error) {
        return Branch::protocol;
    }
    if (protocol_error > guess_error) {
        return Branch::guess;
    }
    return Branch::tie;
}

const char *branch_name(Branch b) {
    switch (b) {
        case Branch::protocol:
            return "protocol";
        case Branch::guess:
            return "guess";
        case Branch::tie:
            return "tie";
    }
    return "?";
}

Rational perr_closed_form(const Instance &inst) {
    inst.validate();
    return min(inst.p * protocol_ratio(inst.d).pow(inst.n), Rational(1) - inst.p);
}

SymmetricPovmVector SymmetricPovmVector::zeros(int n) {
    return {std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0))};
}

SymmetricPovmVector SymmetricPovmVector::ones(int n) {
    return {std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(1))};
}

SymmetricPovmVector SymmetricPovmVector::protocol(int d, int n) {
    Rational r = protocol_ratio(d);
    SymmetricPovmVector v = zeros(n);
    Rational power(1);
    for (int k = n; k >= 0; --k) {
        v.x[static_cast<std::size_t>(k)] = power;
        power *= r;
    }
    return v;
}

bool SymmetricPovmVector::in_unit_box() const {
    for (const auto &xk : x) {
        if (xk.sign() < 0 || xk > Rational(1)) {
            return false;
        }
    }
    return true;
}

Rational povm_error_symmetric(const SymmetricPovmVector &x, const Instance &inst) {
    inst.validate();
    if (x.size() != static_cast<std::size_t>(inst.n) + 1) {
        throw DimensionMismatch("POVM vector has length " + std::to_string(x.size()) + ", expected n+1=" +
                                std::to_string(inst.n + 1));
    }
    Rational q = Rational(1) - inst.p;
    return q + inst.p * (x[0] - (q / inst.p) * x[static_cast<std::size_t>(inst.n)]);
}

}  // namespace wernerlp
