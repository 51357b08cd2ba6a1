// Copyright 2026 The alphaspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "alphaspec/graph.hpp"

namespace alphaspec {

inline constexpr double kDefaultEigenTolerance = 1e-10;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  /// max |m_ij - m_ji|; requires a square matrix.
  double max_asymmetry() const;
  Matrix principal_submatrix(std::span<const std::size_t> indices) const;
  Matrix operator*(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// alpha * D(G) + (1 - alpha) * A(G).
struct AlphaMatrix {
  double alpha = 0.0;
  Matrix entries;

  std::size_t order() const { return entries.rows(); }
};

AlphaMatrix alpha_matrix(const Graph& g, double alpha);

/// Eigenvalues sorted descending, plus the off-diagonal Frobenius norm left
/// when the Jacobi sweeps stopped.
struct Spectrum {
  std::vector<double> eigenvalues;
  double off_diagonal_norm = 0.0;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations: sweeps until the off-diagonal Frobenius norm drops
/// below 1e-12, at most 100 sweeps. Rejects inputs with asymmetry > 1e-12.
Spectrum symmetric_eigenvalues(const Matrix& m);

/// Largest eigenvalue of a symmetric matrix. Throws std::runtime_error if the
/// solver could not certify an off-diagonal residual within `tol`.
double spectral_radius(const Matrix& m, double tol = kDefaultEigenTolerance);

/// Ordered disjoint cover of [0, n) by nonempty cells.
struct Partition {
  std::vector<VertexSet> cells;

  static Partition from_cells(std::size_t n, const std::vector<std::vector<std::size_t>>& cells);
  /// Every vertex in its own cell.
  static Partition discrete(std::size_t n);
  std::size_t order() const;
  std::vector<std::size_t> cell_sizes() const;
  void validate(std::size_t n) const;
};

/// Apex clique (when present) followed by one cell per part, in layout order.
Partition family_partition(const JoinFamilySpec& spec);

/// Apex clique (when present) followed by one cell per entry of `cells`; each
/// entry lists part sizes whose cliques are merged into that cell. Parts are
/// claimed from the largest layout position down, so `{{m}, {3}, {1,...,1}}`
/// reproduces the K_s, K_m, K_3, sK_1 split of K_s v (K_m u K_3 u sK_1) even
/// when m coincides with 3 or 1.
Partition grouped_partition(const JoinFamilySpec& spec,
                            const std::vector<std::vector<std::size_t>>& cells);

/// Average block row sums, with the cell sizes kept for symmetrization.
struct QuotientMatrix {
  Matrix entries;
  std::vector<std::size_t> cell_sizes;
};

QuotientMatrix quotient(const Matrix& m, const Partition& p);
QuotientMatrix quotient(const AlphaMatrix& m, const Partition& p);
bool is_equitable(const Matrix& m, const Partition& p, double tol = kSymmetryTolerance);
bool is_equitable(const AlphaMatrix& m, const Partition& p, double tol = kSymmetryTolerance);

/// D^{1/2} Q D^{-1/2} with D = diag(cell sizes). Symmetric whenever Q is the
/// quotient of a symmetric matrix over an equitable partition.
Matrix symmetrize(const QuotientMatrix& q);

/// Largest real eigenvalue of the quotient. Uses symmetrize + Jacobi when the
/// cell sizes are positive and the similarity comes out symmetric; otherwise
/// falls back to characteristic-polynomial root isolation.
double quotient_largest_eigenvalue(const QuotientMatrix& q);

/// det(xI - M) coefficients, lowest degree first (Faddeev-LeVerrier).
std::vector<double> characteristic_coefficients(const Matrix& m);
/// All real roots, ascending. Roots are isolated between consecutive real
/// critical points and refined by bisection.
std::vector<double> real_roots(std::span<const double> coefficients);
double largest_real_eigenvalue_charpoly(const Matrix& m);

/// Cauchy interlacing between a symmetric matrix and its principal submatrix
/// on `rows`: lambda_i >= mu_i >= lambda_{s-t+i}, with additive slack.
bool interlacing_check(const Matrix& m, std::span<const std::size_t> rows, double slack = 1e-9);

}  // namespace alphaspec
