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

#include "wernerlp/dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wernerlp/errors.hpp"
#include "wernerlp/rng.hpp"

namespace wernerlp {

namespace {

constexpr double kStateTolerance = 1e-9;
constexpr double kSupportCutoff = 1e-9;

void require_same_dim(const DenseSymmetric &a, const DenseSymmetric &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
}

void require_prior(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw InvalidArgument("prior must satisfy 0 < p < 1");
    }
}

std::size_t checked_power(std::size_t base, int n, std::size_t cap) {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / base) {
            throw SizeLimitExceeded("dimension " + std::to_string(base) + "^" + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(cap));
        }
        total *= base;
    }
    return total;
}

// Sum_{words} over the final level from the level-(n-1) family, which is
// small enough to keep in full.
std::vector<DenseSymmetric> word_sum_family(const DenseSymmetric &first, const DenseSymmetric &second, int n) {
    std::vector<DenseSymmetric> level{first, second};
    for (int m = 2; m <= n; ++m) {
        std::vector<DenseSymmetric> next;
        next.reserve(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            DenseSymmetric acc(level.front().dim() * first.dim());
            if (j < m) {
                acc += kron(level[static_cast<std::size_t>(j)], first);
            }
            if (j > 0) {
                acc += kron(level[static_cast<std::size_t>(j - 1)], second);
            }
            next.push_back(std::move(acc));
        }
        level = std::move(next);
    }
    return level;
}

DenseSymmetric outer_projector(const Matrix &vectors, std::span<const std::size_t> columns) {
    DenseSymmetric out(vectors.rows());
    for (std::size_t col : columns) {
        for (std::size_t i = 0; i < vectors.rows(); ++i) {
            double vi = vectors(i, col);
            if (vi == 0.0) {
                continue;
            }
            for (std::size_t j = i; j < vectors.rows(); ++j) {
                out.add(i, j, vi * vectors(j, col));
            }
        }
    }
    return out;
}

}  // namespace

DenseSymmetric::DenseSymmetric(std::size_t dim, std::vector<double> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) {
        throw DimensionMismatch("expected " + std::to_string(dim * dim) + " entries, got " +
                                std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            double a = entries_[i * dim + j];
            double b = entries_[j * dim + i];
            if (!(std::abs(a - b) <= kSymmetryTolerance)) {
                throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ")");
            }
            double mean = 0.5 * (a + b);
            entries_[i * dim + j] = mean;
            entries_[j * dim + i] = mean;
        }
    }
}

DenseSymmetric DenseSymmetric::adopt(std::size_t dim, std::vector<double> entries) {
    DenseSymmetric m;
    m.dim_ = dim;
    m.entries_ = std::move(entries);
    return m;
}

DenseSymmetric DenseSymmetric::identity(std::size_t dim) {
    DenseSymmetric m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.entries_[i * dim + i] = 1.0;
    }
    return m;
}

DenseSymmetric DenseSymmetric::diagonal(std::span<const double> values) {
    DenseSymmetric m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m.entries_[i * values.size() + i] = values[i];
    }
    return m;
}

DenseSymmetric DenseSymmetric::from_matrix(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("matrix is not square");
    }
    return DenseSymmetric(m.rows(), std::vector<double>(m.data().begin(), m.data().end()));
}

void DenseSymmetric::set(std::size_t i, std::size_t j, double value) {
    entries_[i * dim_ + j] = value;
    entries_[j * dim_ + i] = value;
}

void DenseSymmetric::add(std::size_t i, std::size_t j, double value) {
    entries_[i * dim_ + j] += value;
    if (i != j) {
        entries_[j * dim_ + i] += value;
    }
}

double DenseSymmetric::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += entries_[i * dim_ + i];
    }
    return t;
}

double DenseSymmetric::frobenius_norm() const {
    return std::sqrt(std::inner_product(entries_.begin(), entries_.end(), entries_.begin(), 0.0));
}

DenseSymmetric &DenseSymmetric::operator+=(const DenseSymmetric &o) { return add_scaled(o, 1.0); }

DenseSymmetric &DenseSymmetric::operator-=(const DenseSymmetric &o) { return add_scaled(o, -1.0); }

DenseSymmetric &DenseSymmetric::operator*=(double s) {
    for (double &e : entries_) {
        e *= s;
    }
    return *this;
}

DenseSymmetric &DenseSymmetric::add_scaled(const DenseSymmetric &o, double s) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += s * o.entries_[i];
    }
    return *this;
}

DenseSymmetric kron(const DenseSymmetric &a, const DenseSymmetric &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    const std::size_t dim = da * db;
    std::vector<double> out(dim * dim, 0.0);
    auto be = b.entries();
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            double aij = a(i, j);
            if (aij == 0.0) {
                continue;
            }
            for (std::size_t k = 0; k < db; ++k) {
                double *row = &out[(i * db + k) * dim + j * db];
                const double *brow = &be[k * db];
                for (std::size_t l = 0; l < db; ++l) {
                    row[l] = aij * brow[l];
                }
            }
        }
    }
    // Products of symmetric factors are exactly symmetric.
    return DenseSymmetric::adopt(dim, std::move(out));
}

DenseSymmetric tensor_power(const DenseSymmetric &a, int n, std::size_t cap) {
    if (n < 1) {
        throw InvalidArgument("tensor power needs n >= 1");
    }
    checked_power(a.dim(), n, cap);
    DenseSymmetric out = a;
    for (int i = 1; i < n; ++i) {
        out = kron(out, a);
    }
    return out;
}

double trace_product(const DenseSymmetric &a, const DenseSymmetric &b) {
    require_same_dim(a, b);
    auto ae = a.entries();
    auto be = b.entries();
    return std::inner_product(ae.begin(), ae.end(), be.begin(), 0.0);
}

double max_abs_difference(const DenseSymmetric &a, const DenseSymmetric &b) {
    require_same_dim(a, b);
    double m = 0.0;
    auto ae = a.entries();
    auto be = b.entries();
    for (std::size_t i = 0; i < ae.size(); ++i) {
        m = std::max(m, std::abs(ae[i] - be[i]));
    }
    return m;
}

Matrix multiply(const DenseSymmetric &a, const DenseSymmetric &b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            double aik = a(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

SubsystemShape SubsystemShape::copies(int d, int n) {
    require_dimension(d);
    if (n < 1) {
        throw InvalidArgument("copies() needs n >= 1");
    }
    return SubsystemShape{std::vector<std::size_t>(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(d))};
}

std::size_t SubsystemShape::total() const {
    std::size_t t = 1;
    for (std::size_t d : dims) {
        t *= d;
    }
    return t;
}

std::vector<std::size_t> SubsystemShape::second_party() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < dims.size(); i += 2) {
        out.push_back(i);
    }
    return out;
}

DenseSymmetric partial_transpose(const DenseSymmetric &x, const SubsystemShape &shape,
                                 std::span<const std::size_t> which) {
    const std::size_t dim = x.dim();
    if (shape.dims.empty() || shape.total() != dim) {
        throw DimensionMismatch("subsystem shape of total dimension " + std::to_string(shape.total()) +
                                " does not match matrix dimension " + std::to_string(dim));
    }
    std::vector<bool> swapped(shape.dims.size(), false);
    for (std::size_t f : which) {
        if (f >= shape.dims.size()) {
            throw InvalidArgument("factor index " + std::to_string(f) + " out of range");
        }
        swapped[f] = true;
    }
    // Split every index into the part on kept factors and the part on
    // transposed factors; then Y[r][c] = X[keep(r) + swap(c)][keep(c) + swap(r)].
    std::vector<std::size_t> keep(dim);
    std::vector<std::size_t> swap(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t rem = idx;
        std::size_t stride = dim;
        std::size_t kept = 0;
        std::size_t moved = 0;
        for (std::size_t f = 0; f < shape.dims.size(); ++f) {
            stride /= shape.dims[f];
            std::size_t digit = rem / stride;
            rem %= stride;
            (swapped[f] ? moved : kept) += digit * stride;
        }
        keep[idx] = kept;
        swap[idx] = moved;
    }
    std::vector<double> out(dim * dim);
    auto xe = x.entries();
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out[r * dim + c] = xe[(keep[r] + swap[c]) * dim + keep[c] + swap[r]];
        }
    }
    // The index map commutes with (r, c) -> (c, r), so symmetry is exact.
    return DenseSymmetric::adopt(dim, std::move(out));
}

WernerProjectors build_projectors(int d) {
    require_dimension(d);
    const auto ud = static_cast<std::size_t>(d);
    const std::size_t dim = ud * ud;
    WernerProjectors out{DenseSymmetric(dim), DenseSymmetric(dim), DenseSymmetric(dim), DenseSymmetric(dim)};
    for (std::size_t i = 0; i < ud; ++i) {
        for (std::size_t j = 0; j < ud; ++j) {
            const std::size_t ij = i * ud + j;
            const std::size_t ji = j * ud + i;
            out.flip.set(ij, ji, 1.0);
            out.max_entangled.set(i * ud + i, j * ud + j, 1.0 / static_cast<double>(d));
            if (i == j) {
                out.sym.set(ij, ij, 1.0);
            } else {
                // (1 +/- F)/2 on the pair {|ij>, |ji>}.
                out.sym.set(ij, ij, 0.5);
                out.sym.set(ij, ji, 0.5);
                out.anti.set(ij, ij, 0.5);
                out.anti.set(ij, ji, -0.5);
            }
        }
    }
    return out;
}

DenseSymmetric werner_state(int d, WernerRole role) {
    auto projectors = build_projectors(d);
    auto desc = WernerDescriptor::make(d, role);
    DenseSymmetric &proj = role == WernerRole::symmetric ? projectors.sym : projectors.anti;
    return (1.0 / static_cast<double>(desc.rank())) * std::move(proj);
}

DenseSymmetric computational_povm_element(int d) {
    require_dimension(d);
    const auto ud = static_cast<std::size_t>(d);
    DenseSymmetric g(ud * ud);
    for (std::size_t i = 0; i < ud; ++i) {
        for (std::size_t j = 0; j < ud; ++j) {
            if (i != j) {
                g.set(i * ud + j, i * ud + j, 1.0);
            }
        }
    }
    return g;
}

DenseSymmetric twirled_povm_element(int d) {
    auto projectors = build_projectors(d);
    double r = static_cast<double>(d - 1) / static_cast<double>(d + 1);
    return (r * projectors.sym) + projectors.anti;
}

std::pair<double, double> twirl_block_coefficients(const DenseSymmetric &x, int d) {
    auto projectors = build_projectors(d);
    require_same_dim(x, projectors.sym);
    return {trace_product(x, projectors.sym) / projectors.sym.trace(),
            trace_product(x, projectors.anti) / projectors.anti.trace()};
}

DenseSymmetric tensor_word_sum(const DenseSymmetric &first, const DenseSymmetric &second, int n, int count,
                               std::size_t cap) {
    require_same_dim(first, second);
    if (n < 1) {
        throw InvalidArgument("word sums need n >= 1");
    }
    if (count < 0 || count > n) {
        throw InvalidArgument("word count " + std::to_string(count) + " out of range [0, " + std::to_string(n) + "]");
    }
    checked_power(first.dim(), n, cap);
    if (n == 1) {
        return count == 0 ? first : second;
    }
    auto level = word_sum_family(first, second, n - 1);
    DenseSymmetric out(level.front().dim() * first.dim());
    if (count < n) {
        out += kron(level[static_cast<std::size_t>(count)], first);
    }
    if (count > 0) {
        out += kron(level[static_cast<std::size_t>(count - 1)], second);
    }
    return out;
}

DenseSymmetric build_ak(int d, int n, int k, std::size_t cap) {
    auto projectors = build_projectors(d);
    return tensor_word_sum(projectors.sym, projectors.anti, n, k, cap);
}

DenseSymmetric build_tl(int d, int n, int l, std::size_t cap) {
    auto projectors = build_projectors(d);
    DenseSymmetric rest = DenseSymmetric::identity(projectors.max_entangled.dim()) - projectors.max_entangled;
    return tensor_word_sum(rest, projectors.max_entangled, n, l, cap);
}

std::vector<PtExpansion> expand_all_ak_partial_transposes(int d, int n, std::size_t cap) {
    SubsystemShape shape = SubsystemShape::copies(d, n);
    checked_power(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), n, cap);
    auto bob = shape.second_party();

    std::vector<DenseSymmetric> t_family;
    {
        auto projectors = build_projectors(d);
        DenseSymmetric rest = DenseSymmetric::identity(projectors.max_entangled.dim()) - projectors.max_entangled;
        for (int l = 0; l <= n; ++l) {
            t_family.push_back(tensor_word_sum(rest, projectors.max_entangled, n, l, cap));
        }
    }
    std::vector<double> t_norms;
    for (const auto &t : t_family) {
        t_norms.push_back(trace_product(t, t));
    }

    std::vector<PtExpansion> out;
    auto projectors = build_projectors(d);
    for (int k = 0; k <= n; ++k) {
        DenseSymmetric pt = partial_transpose(tensor_word_sum(projectors.sym, projectors.anti, n, k, cap), shape, bob);
        PtExpansion expansion;
        for (std::size_t l = 0; l < t_family.size(); ++l) {
            expansion.coefficients.push_back(trace_product(t_family[l], pt) / t_norms[l]);
        }
        for (std::size_t l = 0; l < t_family.size(); ++l) {
            pt.add_scaled(t_family[l], -expansion.coefficients[l]);
        }
        expansion.residual = pt.frobenius_norm();
        out.push_back(std::move(expansion));
    }
    return out;
}

PtExpansion expand_ak_partial_transpose(int d, int n, int k, std::size_t cap) {
    SubsystemShape shape = SubsystemShape::copies(d, n);
    auto bob = shape.second_party();
    DenseSymmetric pt = partial_transpose(build_ak(d, n, k, cap), shape, bob);
    DenseSymmetric residual = pt;
    PtExpansion expansion;
    for (int l = 0; l <= n; ++l) {
        DenseSymmetric t = build_tl(d, n, l, cap);
        double c = trace_product(t, pt) / trace_product(t, t);
        expansion.coefficients.push_back(c);
        residual.add_scaled(t, -c);
    }
    expansion.residual = residual.frobenius_norm();
    return expansion;
}

EigenDecomposition eigh(const DenseSymmetric &input) {
    const std::size_t n = input.dim();
    Matrix a(n, n);
    Matrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = input(i, j);
        }
        v(i, i) = 1.0;
    }
    const double norm = input.frobenius_norm();
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                s += 2.0 * a(i, j) * a(i, j);
            }
        }
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && norm > 0.0; ++sweep) {
        double off = off_norm();
        if (off <= 1e-15 * norm) {
            break;
        }
        // Threshold pass for the first sweeps, then rotate everything non-zero.
        double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::abs(apq) <= threshold || apq == 0.0) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - s * akq;
                    a(k, q) = a(q, k) = s * akp + c * akq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v(k, p);
                    double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        out.values.push_back(a(order[col], order[col]));
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, col) = v(i, order[col]);
        }
    }
    return out;
}

double trace_norm(const DenseSymmetric &a) {
    double total = 0.0;
    for (double lambda : eigh(a).values) {
        total += std::abs(lambda);
    }
    return total;
}

void validate_state(const DenseSymmetric &rho) {
    if (rho.dim() == 0) {
        throw NotAState("empty matrix");
    }
    double tr = rho.trace();
    if (!(std::abs(tr - 1.0) <= kStateTolerance)) {
        throw NotAState("trace " + std::to_string(tr) + " differs from 1");
    }
    double smallest = eigh(rho).values.front();
    if (smallest < -kStateTolerance) {
        throw NotAState("negative eigenvalue " + std::to_string(smallest));
    }
}

double helstrom(const DenseSymmetric &rho1, const DenseSymmetric &rho2, double p) {
    require_same_dim(rho1, rho2);
    require_prior(p);
    validate_state(rho1);
    validate_state(rho2);
    DenseSymmetric diff = p * rho1;
    diff.add_scaled(rho2, -(1.0 - p));
    return 0.5 - 0.5 * trace_norm(diff);
}

double povm_error(const DenseSymmetric &rho1, const DenseSymmetric &rho2, double p, const DenseSymmetric &e1) {
    require_same_dim(rho1, rho2);
    require_same_dim(rho1, e1);
    require_prior(p);
    auto spectrum = eigh(e1).values;
    if (spectrum.front() < -kStateTolerance || spectrum.back() > 1.0 + kStateTolerance) {
        throw NotAState("POVM element has eigenvalues outside [0, 1]");
    }
    return p * trace_product(e1, rho1) + (1.0 - p) * (rho2.trace() - trace_product(e1, rho2));
}

SeparableBallPovm separable_ball_povm(const DenseSymmetric &rho1, const DenseSymmetric &rho2, double p) {
    require_same_dim(rho1, rho2);
    require_prior(p);
    validate_state(rho1);
    validate_state(rho2);
    const std::size_t dim = rho1.dim();

    DenseSymmetric diff = (1.0 - p) * rho2;
    diff.add_scaled(rho1, -p);
    auto eig = eigh(diff);

    SeparableBallPovm out;
    for (double lambda : eig.values) {
        out.bias_all += std::abs(lambda);
    }
    const bool positive_part = p <= 0.5;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < dim; ++i) {
        double lambda = eig.values[i];
        if (positive_part ? lambda > kSupportCutoff : lambda < -kSupportCutoff) {
            support.push_back(i);
        }
    }
    out.rank = support.size();
    DenseSymmetric id = DenseSymmetric::identity(dim);
    if (support.empty()) {
        out.guess_second = 0.5 * id;
        out.guess_first = 0.5 * id;
        out.degenerate = true;
        out.error = 0.5;
        out.closed_form_error = 0.5;
        out.bias = 0.0;
        return out;
    }

    DenseSymmetric m = outer_projector(eig.vectors, support);
    if (!positive_part) {
        m *= -1.0;
    }
    out.m_norm = m.frobenius_norm();
    out.guess_second = 0.5 * id;
    out.guess_second.add_scaled(m, 0.5 / out.m_norm);
    out.guess_first = id - out.guess_second;
    out.error = povm_error(rho1, rho2, p, out.guess_second);
    out.closed_form_error = 0.5 * (1.0 - (std::abs(1.0 - 2.0 * p) + out.bias_all) / (2.0 * out.m_norm));
    out.bias = 1.0 - 2.0 * out.error;
    if (std::abs(out.error - out.closed_form_error) > 1e-9) {
        throw InternalConsistencyError("separable-ball POVM error " + std::to_string(out.error) +
                                       " disagrees with its closed form " + std::to_string(out.closed_form_error));
    }
    return out;
}

DenseSymmetric random_state(std::size_t dim, std::size_t rank, std::uint64_t seed) {
    if (dim == 0 || rank < 1 || rank > dim) {
        throw InvalidArgument("random_state needs 1 <= rank <= dim");
    }
    Xoshiro256 gen(seed);
    Matrix g(dim, rank);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            g(i, j) = gen.normal();
        }
    }
    DenseSymmetric rho(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < rank; ++k) {
                s += g(i, k) * g(j, k);
            }
            rho.set(i, j, s);
        }
    }
    rho *= 1.0 / rho.trace();
    return rho;
}

std::pair<DenseSymmetric, DenseSymmetric> random_state_pair(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
    if (dim == 0) {
        throw InvalidArgument("random_state_pair needs dim >= 1");
    }
    Xoshiro256 gen(stream_seed(seed, index));
    std::size_t rank1 = 1 + gen.below(dim);
    std::size_t rank2 = 1 + gen.below(dim);
    std::uint64_t seed1 = gen();
    std::uint64_t seed2 = gen();
    return {random_state(dim, rank1, seed1), random_state(dim, rank2, seed2)};
}

}  // namespace wernerlp
