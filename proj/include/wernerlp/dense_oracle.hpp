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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wernerlp/werner_core.hpp"

namespace wernerlp {

/// Largest matrix dimension the dense constructions will build.
inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// Real row-major matrix; used for eigenvector bases and general products.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const double> data() const { return data_; }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct SubsystemShape;

/// Real symmetric matrix in double precision.
class DenseSymmetric {
   public:
    static constexpr double kSymmetryTolerance = 1e-12;

    DenseSymmetric() = default;
    /// Zero matrix.
    explicit DenseSymmetric(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}
    /// Row-major entries; throws InvalidArgument unless
    /// |a_ij - a_ji| <= kSymmetryTolerance. The stored matrix is symmetrized.
    DenseSymmetric(std::size_t dim, std::vector<double> entries);

    static DenseSymmetric identity(std::size_t dim);
    static DenseSymmetric diagonal(std::span<const double> values);
    /// Symmetrizes (A + A^T)/2 after checking the tolerance.
    static DenseSymmetric from_matrix(const Matrix &m);

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    /// Sets entries (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);
    void add(std::size_t i, std::size_t j, double value);
    std::span<const double> entries() const { return entries_; }

    double trace() const;
    double frobenius_norm() const;

    DenseSymmetric &operator+=(const DenseSymmetric &o);
    DenseSymmetric &operator-=(const DenseSymmetric &o);
    DenseSymmetric &operator*=(double s);
    /// this += s * o
    DenseSymmetric &add_scaled(const DenseSymmetric &o, double s);

    friend DenseSymmetric operator+(DenseSymmetric a, const DenseSymmetric &b) { return a += b; }
    friend DenseSymmetric operator-(DenseSymmetric a, const DenseSymmetric &b) { return a -= b; }
    friend DenseSymmetric operator*(double s, DenseSymmetric a) { return a *= s; }

   private:
    // Takes ownership of entries already known to be exactly symmetric.
    static DenseSymmetric adopt(std::size_t dim, std::vector<double> entries);

    friend DenseSymmetric kron(const DenseSymmetric &a, const DenseSymmetric &b);
    friend DenseSymmetric partial_transpose(const DenseSymmetric &x, const SubsystemShape &shape,
                                            std::span<const std::size_t> which);

    std::size_t dim_ = 0;
    std::vector<double> entries_;
};

/// Kronecker product.
DenseSymmetric kron(const DenseSymmetric &a, const DenseSymmetric &b);
/// a^{(x)n}; throws SizeLimitExceeded past the cap.
DenseSymmetric tensor_power(const DenseSymmetric &a, int n, std::size_t cap = kDefaultDimensionCap);
/// Tr(AB) for symmetric A, B.
double trace_product(const DenseSymmetric &a, const DenseSymmetric &b);
double max_abs_difference(const DenseSymmetric &a, const DenseSymmetric &b);
Matrix multiply(const DenseSymmetric &a, const DenseSymmetric &b);

/// Local dimensions of the tensor factors, most significant first.
struct SubsystemShape {
    std::vector<std::size_t> dims;

    /// n copies of a d x d system: (d, d, d, d, ...), 2n factors ordered A1 B1 A2 B2 ...
    static SubsystemShape copies(int d, int n);
    std::size_t total() const;
    /// Factor indices of the second party (B1, B2, ...) for a copies() shape.
    std::vector<std::size_t> second_party() const;
};

/// Transposes the designated tensor factors. Involutive and trace preserving.
DenseSymmetric partial_transpose(const DenseSymmetric &x, const SubsystemShape &shape,
                                 std::span<const std::size_t> which);

struct WernerProjectors {
    DenseSymmetric sym;             // Pi_s = (1 + F)/2
    DenseSymmetric anti;            // Pi_a = (1 - F)/2
    DenseSymmetric max_entangled;   // Phi_d
    DenseSymmetric flip;            // F
};

WernerProjectors build_projectors(int d);

/// Normalized projector sigma_d or alpha_d.
DenseSymmetric werner_state(int d, WernerRole role);

/// Computational-basis "outcomes differ" element G_d = sum_{i != j} |ij><ij|.
DenseSymmetric computational_povm_element(int d);

/// Twirled element M_d = ((d-1)/(d+1)) Pi_s + Pi_a.
DenseSymmetric twirled_povm_element(int d);

/// Coefficients (a, b) of the twirl a Pi_s + b Pi_a of a single-copy operator.
std::pair<double, double> twirl_block_coefficients(const DenseSymmetric &x, int d);

/// Sum of the tensor words in {first, second}^{(x)n} with exactly `count`
/// factors equal to `second`.
DenseSymmetric tensor_word_sum(const DenseSymmetric &first, const DenseSymmetric &second, int n, int count,
                               std::size_t cap = kDefaultDimensionCap);

/// A_k: words in {Pi_s, Pi_a} with k antisymmetric factors.
DenseSymmetric build_ak(int d, int n, int k, std::size_t cap = kDefaultDimensionCap);
/// T_l: words in {1 - Phi_d, Phi_d} with l maximally entangled factors.
DenseSymmetric build_tl(int d, int n, int l, std::size_t cap = kDefaultDimensionCap);

/// Dense expansion of A_k^Gamma over T_0..T_n.
struct PtExpansion {
    std::vector<double> coefficients;  // Tr(T_l A_k^Gamma) / Tr(T_l^2)
    double residual = 0.0;             // || A_k^Gamma - sum_l c_l T_l ||_F
};

PtExpansion expand_ak_partial_transpose(int d, int n, int k, std::size_t cap = kDefaultDimensionCap);

/// All k at once; builds the T_l family a single time.
std::vector<PtExpansion> expand_all_ak_partial_transposes(int d, int n, std::size_t cap = kDefaultDimensionCap);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column i pairs with values[i]
};

/// Cyclic Jacobi eigensolver.
EigenDecomposition eigh(const DenseSymmetric &a);

double trace_norm(const DenseSymmetric &a);

/// Throws NotAState unless eigenvalues >= -1e-9 and |Tr - 1| <= 1e-9.
void validate_state(const DenseSymmetric &rho);

/// 1/2 - 1/2 || p rho1 - (1-p) rho2 ||_1.
double helstrom(const DenseSymmetric &rho1, const DenseSymmetric &rho2, double p);

/// p Tr(E1 rho1) + (1-p) Tr((1 - E1) rho2), where E1 is the element on which
/// the second state is guessed.
double povm_error(const DenseSymmetric &rho1, const DenseSymmetric &rho2, double p, const DenseSymmetric &e1);

struct SeparableBallPovm {
    DenseSymmetric guess_second;  // 1/2 (1 + M/||M||_2)
    DenseSymmetric guess_first;   // 1/2 (1 - M/||M||_2)
    double error = 0.5;
    double closed_form_error = 0.5;
    double bias = 0.0;
    double bias_all = 0.0;  // || (1-p) rho2 - p rho1 ||_1
    double m_norm = 0.0;    // ||M||_2
    std::size_t rank = 0;
    /// The designated part of the difference operator is empty; the POVM is {1/2, 1/2}.
    bool degenerate = false;
};

SeparableBallPovm separable_ball_povm(const DenseSymmetric &rho1, const DenseSymmetric &rho2, double p);

/// G G^T / Tr(G G^T) for a dim x rank matrix G of seeded standard normals.
DenseSymmetric random_state(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Pair number `index` of a seeded family of random states with ranks drawn
/// uniformly from 1..dim.
std::pair<DenseSymmetric, DenseSymmetric> random_state_pair(std::size_t dim, std::uint64_t seed, std::uint64_t index);

}  // namespace wernerlp
