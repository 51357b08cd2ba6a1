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

#include "alphaspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace alphaspec {

namespace {

constexpr double kJacobiTarget = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) sum += a(p, q) * a(p, q);
  return std::sqrt(2.0 * sum);
}

double evaluate(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Sign of p(x), with values inside the Horner roundoff bound counted as zero.
int sign_at(std::span<const double> c, double x) {
  double value = 0.0;
  double scale = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    value = value * x + c[i];
    scale = scale * std::abs(x) + std::abs(c[i]);
  }
  if (std::abs(value) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) return 0;
  return value < 0 ? -1 : 1;
}

std::vector<double> trimmed(std::span<const double> c) {
  std::vector<double> out(c.begin(), c.end());
  while (!out.empty() && out.back() == 0.0) out.pop_back();
  return out;
}

// Root of a polynomial that is monotone on [lo, hi] with a sign change.
double bisect(std::span<const double> c, double lo, double hi) {
  double flo = evaluate(c, lo);
  if (flo == 0.0) return lo;
  if (evaluate(c, hi) == 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = evaluate(c, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::max_asymmetry() const {
  if (!is_square()) throw std::invalid_argument("max_asymmetry: matrix not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

Matrix Matrix::principal_submatrix(std::span<const std::size_t> indices) const {
  std::vector<bool> seen(rows_, false);
  for (std::size_t i : indices) {
    if (i >= rows_ || i >= cols_) throw std::out_of_range("principal_submatrix: index out of range");
    if (seen[i]) throw std::invalid_argument("principal_submatrix: repeated index");
    seen[i] = true;
  }
  Matrix out(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = (*this)(indices[i], indices[j]);
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

AlphaMatrix alpha_matrix(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha_matrix: alpha must lie in [0, 1]");
  const std::size_t n = g.order();
  Matrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    m(v, v) = alpha * static_cast<double>(g.degree(v));
    g.neighbors(v).for_each([&](std::size_t w) { m(v, w) = 1.0 - alpha; });
  }
  return AlphaMatrix{alpha, std::move(m)};
}

Spectrum symmetric_eigenvalues(const Matrix& input) {
  if (!input.is_square()) throw std::invalid_argument("symmetric_eigenvalues: matrix not square");
  if (const double asym = input.max_asymmetry(); asym > kSymmetryTolerance)
    throw std::invalid_argument("symmetric_eigenvalues: asymmetry " + std::to_string(asym));

  Matrix a = input;
  const std::size_t n = a.rows();
  Spectrum out;
  double off = off_diagonal_norm(a);
  while (off >= kJacobiTarget && out.sweeps < kJacobiMaxSweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
    }
    ++out.sweeps;
    off = off_diagonal_norm(a);
  }
  out.off_diagonal_norm = off;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

double spectral_radius(const Matrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_radius: tol must be positive");
  if (m.rows() == 0) throw std::invalid_argument("spectral_radius: empty matrix");
  const Spectrum sp = symmetric_eigenvalues(m);
  if (sp.off_diagonal_norm > tol)
    throw std::runtime_error("spectral_radius: Jacobi residual " +
                             std::to_string(sp.off_diagonal_norm) + " above tolerance");
  return sp.eigenvalues.front();
}

Partition Partition::from_cells(std::size_t n, const std::vector<std::vector<std::size_t>>& cells) {
  Partition p;
  for (const auto& cell : cells) p.cells.push_back(VertexSet::from_members(n, cell));
  p.validate(n);
  return p;
}

Partition Partition::discrete(std::size_t n) {
  Partition p;
  for (std::size_t v = 0; v < n; ++v) p.cells.push_back(VertexSet(n, {v}));
  return p;
}

std::size_t Partition::order() const { return cells.empty() ? 0 : cells.front().universe(); }

std::vector<std::size_t> Partition::cell_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells) out.push_back(c.count());
  return out;
}

void Partition::validate(std::size_t n) const {
  VertexSet covered(n);
  std::size_t total = 0;
  for (const auto& c : cells) {
    if (c.universe() != n) throw std::invalid_argument("Partition: cell universe mismatch");
    if (c.empty()) throw std::invalid_argument("Partition: empty cell");
    total += c.count();
    covered |= c;
  }
  if (total != n || covered.count() != n)
    throw std::invalid_argument("Partition: cells are not a disjoint cover");
}

Partition family_partition(const JoinFamilySpec& spec) {
  const std::size_t n = spec.order();
  std::vector<std::vector<std::size_t>> cells;
  if (spec.apex > 0) {
    cells.emplace_back();
    for (std::size_t v = 0; v < spec.apex; ++v) cells.back().push_back(v);
  }
  const auto offsets = part_offsets(spec);
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    cells.emplace_back();
    for (std::size_t k = 0; k < spec.parts[i]; ++k) cells.back().push_back(offsets[i] + k);
  }
  return Partition::from_cells(n, cells);
}

Partition grouped_partition(const JoinFamilySpec& spec,
                            const std::vector<std::vector<std::size_t>>& cells) {
  const std::size_t n = spec.order();
  const auto offsets = part_offsets(spec);
  std::vector<bool> claimed(spec.parts.size(), false);
  std::vector<std::vector<std::size_t>> out;
  if (spec.apex > 0) {
    out.emplace_back();
    for (std::size_t v = 0; v < spec.apex; ++v) out.back().push_back(v);
  }
  for (const auto& sizes : cells) {
    out.emplace_back();
    for (std::size_t want : sizes) {
      std::size_t pick = spec.parts.size();
      for (std::size_t i = spec.parts.size(); i-- > 0;)
        if (!claimed[i] && spec.parts[i] == want) {
          pick = i;
          break;
        }
      if (pick == spec.parts.size())
        throw std::invalid_argument("grouped_partition: no unclaimed part of size " +
                                    std::to_string(want));
      claimed[pick] = true;
      for (std::size_t k = 0; k < spec.parts[pick]; ++k) out.back().push_back(offsets[pick] + k);
    }
  }
  if (std::find(claimed.begin(), claimed.end(), false) != claimed.end())
    throw std::invalid_argument("grouped_partition: parts left unassigned");
  return Partition::from_cells(n, out);
}

QuotientMatrix quotient(const Matrix& m, const Partition& p) {
  if (!m.is_square()) throw std::invalid_argument("quotient: matrix not square");
  p.validate(m.rows());
  const std::size_t r = p.cells.size();
  std::vector<std::vector<std::size_t>> members;
  for (const auto& c : p.cells) members.push_back(c.members());
  QuotientMatrix q{Matrix(r, r), p.cell_sizes()};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      double total = 0.0;
      for (std::size_t row : members[i])
        for (std::size_t col : members[j]) total += m(row, col);
      q.entries(i, j) = total / static_cast<double>(members[i].size());
    }
  return q;
}

QuotientMatrix quotient(const AlphaMatrix& m, const Partition& p) { return quotient(m.entries, p); }

bool is_equitable(const Matrix& m, const Partition& p, double tol) {
  p.validate(m.rows());
  std::vector<std::vector<std::size_t>> members;
  for (const auto& c : p.cells) members.push_back(c.members());
  for (const auto& cell_i : members)
    for (const auto& cell_j : members) {
      double first = 0.0;
      for (std::size_t k = 0; k < cell_i.size(); ++k) {
        double sum = 0.0;
        for (std::size_t col : cell_j) sum += m(cell_i[k], col);
        if (k == 0) first = sum;
        else if (std::abs(sum - first) > tol) return false;
      }
    }
  return true;
}

bool is_equitable(const AlphaMatrix& m, const Partition& p, double tol) {
  return is_equitable(m.entries, p, tol);
}

Matrix symmetrize(const QuotientMatrix& q) {
  const std::size_t r = q.entries.rows();
  if (q.cell_sizes.size() != r) throw std::invalid_argument("symmetrize: cell sizes missing");
  for (std::size_t size : q.cell_sizes)
    if (size == 0) throw std::invalid_argument("symmetrize: zero cell size");
  Matrix out(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      out(i, j) = q.entries(i, j) * std::sqrt(static_cast<double>(q.cell_sizes[i]) /
                                              static_cast<double>(q.cell_sizes[j]));
  return out;
}

double quotient_largest_eigenvalue(const QuotientMatrix& q) {
  const std::size_t r = q.entries.rows();
  if (r == 0) throw std::invalid_argument("quotient_largest_eigenvalue: empty matrix");
  const bool sizes_usable =
      q.cell_sizes.size() == r &&
      std::all_of(q.cell_sizes.begin(), q.cell_sizes.end(), [](std::size_t s) { return s > 0; });
  if (sizes_usable) {
    Matrix sym = symmetrize(q);
    if (sym.max_asymmetry() <= 1e-10) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) sym(i, j) = sym(j, i) = 0.5 * (sym(i, j) + sym(j, i));
      return spectral_radius(sym);
    }
  }
  return largest_real_eigenvalue_charpoly(q.entries);
}

std::vector<double> characteristic_coefficients(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic_coefficients: not square");
  const std::size_t n = m.rows();
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const Matrix amk = m * mk;
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / static_cast<double>(k);
  }
  return c;
}

std::vector<double> real_roots(std::span<const double> coefficients) {
  const std::vector<double> c = trimmed(coefficients);
  if (c.size() <= 1) return {};
  if (c.size() == 2) return {-c[0] / c[1]};

  std::vector<double> derivative(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) derivative[i - 1] = c[i] * static_cast<double>(i);
  const std::vector<double> critical = real_roots(derivative);

  double bound = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, std::abs(c[i] / c.back()));
  bound += 1.0;

  std::vector<double> marks;
  marks.push_back(-bound);
  for (double x : critical)
    if (x > -bound && x < bound) marks.push_back(x);
  marks.push_back(bound);

  // p is monotone between consecutive marks, so a mark where p vanishes (a
  // multiple root sits on a critical point) leaves no root inside its intervals.
  std::vector<double> roots;
  std::vector<int> signs(marks.size());
  for (std::size_t i = 0; i < marks.size(); ++i) signs[i] = sign_at(c, marks[i]);
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (signs[i] == 0 && (roots.empty() || roots.back() != marks[i])) roots.push_back(marks[i]);
    if (i + 1 < marks.size() && signs[i] * signs[i + 1] < 0) roots.push_back(bisect(c, marks[i], marks[i + 1]));
  }
  return roots;
}

double largest_real_eigenvalue_charpoly(const Matrix& m) {
  const auto roots = real_roots(characteristic_coefficients(m));
  if (roots.empty()) throw std::runtime_error("largest_real_eigenvalue_charpoly: no real root");
  return roots.back();
}

bool interlacing_check(const Matrix& m, std::span<const std::size_t> rows, double slack) {
  const auto lambda = symmetric_eigenvalues(m).eigenvalues;
  const auto mu = symmetric_eigenvalues(m.principal_submatrix(rows)).eigenvalues;
  const std::size_t s = lambda.size();
  const std::size_t t = mu.size();
  if (t > s) return false;
  for (std::size_t i = 0; i < t; ++i) {
    if (mu[i] > lambda[i] + slack) return false;
    if (mu[i] < lambda[s - t + i] - slack) return false;
  }
  return true;
}

}  // namespace alphaspec
