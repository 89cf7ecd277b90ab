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

#include "wernerlp/chernoff.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "wernerlp/errors.hpp"

namespace wernerlp {

namespace {

constexpr double kDistributionTolerance = 1e-12;
constexpr double kSupportCutoff = 1e-9;
constexpr double kOrthogonalityTolerance = 1e-12;

struct Minimum {
    double s = 0.5;
    double value = 1.0;
    int evaluations = 0;
};

// Golden-section search on [0, 1] to |interval| <= 1e-12; endpoints are
// compared explicitly so boundary minima are exact.
Minimum minimize_on_unit_interval(const std::function<double(double)> &f) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    Minimum best;
    double lo = 0.0;
    double hi = 1.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    best.evaluations = 2;
    while (hi - lo > 1e-12) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
        ++best.evaluations;
    }
    best.s = 0.5 * (lo + hi);
    best.value = f(best.s);
    for (double endpoint : {0.0, 1.0}) {
        double v = f(endpoint);
        if (v < best.value) {
            best.s = endpoint;
            best.value = v;
        }
    }
    best.evaluations += 3;
    return best;
}

ChernoffResult from_minimum(const Minimum &m) {
    ChernoffResult r;
    r.value_nats = std::max(0.0, -std::log(m.value));
    r.value_bits = r.value_nats / std::numbers::ln2;
    r.s_star = m.s;
    r.evaluations = m.evaluations;
    return r;
}

ChernoffResult infinite_result() {
    ChernoffResult r;
    r.infinite = true;
    r.value_bits = std::numeric_limits<double>::infinity();
    r.value_nats = std::numeric_limits<double>::infinity();
    return r;
}

void validate_distribution(std::span<const double> v, const char *name) {
    if (v.empty()) {
        throw InvalidArgument(std::string(name) + " is empty");
    }
    double total = 0.0;
    for (double x : v) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw InvalidArgument(std::string(name) + " has a negative or non-finite entry");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kDistributionTolerance) {
        throw InvalidArgument(std::string(name) + " sums to " + std::to_string(total) + ", not 1");
    }
}

}  // namespace

ChernoffResult classical_chernoff(std::span<const double> p, std::span<const double> q) {
    validate_distribution(p, "P");
    validate_distribution(q, "Q");
    if (p.size() != q.size()) {
        throw DimensionMismatch("distributions have different lengths");
    }
    if (std::equal(p.begin(), p.end(), q.begin())) {
        ChernoffResult r;
        r.s_star = 0.5;
        return r;
    }
    std::vector<double> ps;
    std::vector<double> qs;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0 && q[i] > 0.0) {
            ps.push_back(p[i]);
            qs.push_back(q[i]);
        }
    }
    if (ps.empty()) {
        return infinite_result();
    }
    auto f = [&](double s) {
        double total = 0.0;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            total += std::pow(ps[i], 1.0 - s) * std::pow(qs[i], s);
        }
        return total;
    };
    return from_minimum(minimize_on_unit_interval(f));
}

ChernoffResult classical_chernoff(const std::vector<Rational> &p, const std::vector<Rational> &q) {
    auto exact_check = [](const std::vector<Rational> &v, const char *name) {
        Rational total;
        for (const auto &x : v) {
            if (x.sign() < 0) {
                throw InvalidArgument(std::string(name) + " has a negative entry");
            }
            total += x;
        }
        if (total != Rational(1)) {
            throw InvalidArgument(std::string(name) + " sums to " + total.str() + ", not 1");
        }
    };
    exact_check(p, "P");
    exact_check(q, "Q");
    if (p.size() != q.size()) {
        throw DimensionMismatch("distributions have different lengths");
    }
    if (p == q) {
        ChernoffResult r;
        r.s_star = 0.5;
        return r;
    }
    std::vector<double> pd;
    std::vector<double> qd;
    for (std::size_t i = 0; i < p.size(); ++i) {
        pd.push_back(p[i].to_double());
        qd.push_back(q[i].to_double());
    }
    // Rounding can push the double sums off 1 by more than the tolerance for
    // long vectors; renormalize since the exact sums are already checked.
    double ps = 0.0;
    double qs = 0.0;
    for (std::size_t i = 0; i < pd.size(); ++i) {
        ps += pd[i];
        qs += qd[i];
    }
    for (std::size_t i = 0; i < pd.size(); ++i) {
        pd[i] /= ps;
        qd[i] /= qs;
    }
    return classical_chernoff(std::span<const double>(pd), std::span<const double>(qd));
}

ChernoffResult quantum_chernoff(const DenseSymmetric &rho1, const DenseSymmetric &rho2) {
    if (rho1.dim() != rho2.dim()) {
        throw DimensionMismatch("states have different dimensions");
    }
    validate_state(rho1);
    validate_state(rho2);
    if (max_abs_difference(rho1, rho2) == 0.0) {
        ChernoffResult r;
        r.s_star = 0.5;
        return r;
    }
    auto e1 = eigh(rho1);
    auto e2 = eigh(rho2);
    const std::size_t dim = rho1.dim();
    std::vector<std::size_t> s1;
    std::vector<std::size_t> s2;
    for (std::size_t i = 0; i < dim; ++i) {
        if (e1.values[i] > kSupportCutoff) {
            s1.push_back(i);
        }
        if (e2.values[i] > kSupportCutoff) {
            s2.push_back(i);
        }
    }
    struct Term {
        double lambda;
        double mu;
        double overlap;
    };
    std::vector<Term> terms;
    double total_overlap = 0.0;
    for (std::size_t i : s1) {
        for (std::size_t j : s2) {
            double dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                dot += e1.vectors(k, i) * e2.vectors(k, j);
            }
            double overlap = dot * dot;
            total_overlap += overlap;
            terms.push_back({e1.values[i], e2.values[j], overlap});
        }
    }
    if (total_overlap <= kOrthogonalityTolerance) {
        return infinite_result();
    }
    auto g = [&](double s) {
        double total = 0.0;
        for (const auto &t : terms) {
            total += std::pow(t.lambda, 1.0 - s) * std::pow(t.mu, s) * t.overlap;
        }
        return total;
    };
    return from_minimum(minimize_on_unit_interval(g));
}

WernerChernoff ci_locc_werner(int d) {
    require_dimension(d);
    WernerChernoff out;
    out.ratio = Rational(d + 1, d - 1);
    out.bits = log2_of(out.ratio);
    out.nats = out.bits * std::numbers::ln2;
    auto dist = outcome_distributions(d);
    out.single_copy_bits = classical_chernoff(dist.symmetric(), dist.antisymmetric()).value_bits;
    out.agrees = std::abs(out.bits - out.single_copy_bits) <= 1e-12;
    return out;
}

std::vector<RatePoint> rate_convergence_check(int d, int n_max, const Rational &p) {
    Instance::make(d, 1, p);
    if (n_max < 1) {
        throw InvalidArgument("n_max must be >= 1");
    }
    const Rational r = protocol_ratio(d);
    const Rational guess = Rational(1) - p;
    std::vector<RatePoint> out;
    out.reserve(static_cast<std::size_t>(n_max));
    Rational protocol = p;
    for (int n = 1; n <= n_max; ++n) {
        protocol *= r;
        Branch branch = protocol < guess ? Branch::protocol : protocol > guess ? Branch::guess : Branch::tie;
        const Rational &perr = branch == Branch::guess ? guess : protocol;
        out.push_back({n, -log2_of(perr) / n, branch});
    }
    return out;
}

}  // namespace wernerlp
