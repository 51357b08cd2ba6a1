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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "alphaspec/rational.hpp"
#include "alphaspec/spectral.hpp"
#include "support.hpp"

using namespace alphaspec;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  return m;
}

std::vector<double> eigen_reference(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
  for (;;) {
    const Graph g = testing::random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("Jacobi agrees with an independent dense solver") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 30;
    const Matrix m = random_symmetric(rng, n);
    const Spectrum s = symmetric_eigenvalues(m);
    const auto ref = eigen_reference(m);
    REQUIRE(s.eigenvalues.size() == n);
    CHECK(s.off_diagonal_norm < 1e-12);
    for (std::size_t i = 0; i < n; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(ref[i]).epsilon(1e-10).scale(100));
  }
}

TEST_CASE("input validation") {
  Matrix asym{{1, 2}, {2.1, 1}};
  CHECK_THROWS(symmetric_eigenvalues(asym));
  CHECK_THROWS(alpha_matrix(complete(3), -0.1));
  CHECK_THROWS(alpha_matrix(complete(3), 1.5));
  CHECK(symmetric_eigenvalues(Matrix(0, 0)).eigenvalues.empty());
}

TEST_CASE("regular graphs have radius equal to the degree") {
  for (std::size_t n : {18, 20, 30, 40})
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0})
      CHECK(std::abs(spectral_radius(alpha_matrix(complete(n - 4), alpha).entries) - static_cast<double>(n - 5)) <= 1e-9);
  const Graph c7 = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
  CHECK(spectral_radius(alpha_matrix(c7, 0.3).entries) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("radii match the reference values") {
  for (const auto& r : testing::oracles()["radius"]) {
    const Graph g = r.contains("edges")
                        ? testing::graph_from_json(r["n"], r["edges"])
                        : build_family(JoinFamilySpec::make(r["s"], r["parts"].get<std::vector<std::size_t>>()));
    const double alpha = to_double(parse_rational(r["alpha"].get<std::string>()));
    CHECK(std::abs(spectral_radius(alpha_matrix(g, alpha).entries) - r["rho"].get<double>()) <= 1e-9);
  }
}

TEST_CASE("deleting an edge of a connected graph strictly lowers the radius") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + rng() % 14;
    const Graph g = random_connected(rng, n, 0.5);
    const auto edges = g.edges();
    const Edge e = edges[rng() % edges.size()];
    const double alpha = static_cast<double>(rng() % 20) / 20.0;
    const double before = spectral_radius(alpha_matrix(g, alpha).entries);
    const double after = spectral_radius(alpha_matrix(g.without_edge(e.first, e.second), alpha).entries);
    CHECK(before - after > 1e-12);
  }
}

TEST_CASE("equitable family partitions reproduce the radius") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::size_t> parts(1 + rng() % 5);
    for (auto& p : parts) p = 1 + rng() % 6;
    const auto spec = JoinFamilySpec::make(rng() % 4, parts);
    const double alpha = static_cast<double>(rng() % 11) / 10.0;
    const AlphaMatrix m = alpha_matrix(build_family(spec), alpha);
    const Partition p = family_partition(spec);
    CHECK(is_equitable(m, p));
    const QuotientMatrix q = quotient(m, p);
    CHECK(q.cell_sizes == p.cell_sizes());
    CHECK(symmetrize(q).max_asymmetry() < 1e-12);
    CHECK(std::abs(quotient_largest_eigenvalue(q) - spectral_radius(m.entries)) <= 1e-8);
    CHECK(std::abs(largest_real_eigenvalue_charpoly(q.entries) - spectral_radius(m.entries)) <= 1e-8);
  }
  const Partition bad = Partition::from_cells(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_equitable(alpha_matrix(Graph::from_edges(4, {{0, 2}, {1, 2}, {2, 3}}), 0.0), bad));
  CHECK_THROWS(Partition::from_cells(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS(Partition::from_cells(3, {{0, 1}}));
}

TEST_CASE("grouped partitions handle coinciding part sizes") {
  // K_6 v (K_3 u K_3 u 6K_1): the big part has the same size as the K_3 part.
  const auto spec = JoinFamilySpec::make(6, {1, 1, 1, 1, 1, 1, 3, 3});
  const Partition p = grouped_partition(spec, {{3}, {3}, std::vector<std::size_t>(6, 1)});
  CHECK(p.cell_sizes() == std::vector<std::size_t>{6, 3, 3, 6});
  CHECK(is_equitable(alpha_matrix(build_family(spec), 0.25), p));
  CHECK_THROWS(grouped_partition(spec, {{5}}));
}

TEST_CASE("characteristic polynomials and real roots") {
  const Matrix d{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  const auto c = characteristic_coefficients(d);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == doctest::Approx(-6));
  CHECK(c[1] == doctest::Approx(11));
  CHECK(c[2] == doctest::Approx(-6));
  CHECK(c[3] == doctest::Approx(1));
  const auto roots = real_roots(c);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(1));
  CHECK(roots[2] == doctest::Approx(3));
  const std::vector<double> no_real{1, 0, 1};
  CHECK(real_roots(no_real).empty());
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_symmetric(rng, 2 + rng() % 6);
    CHECK(largest_real_eigenvalue_charpoly(m) == doctest::Approx(eigen_reference(m)[0]).epsilon(1e-7));
  }
}

TEST_CASE("interlacing on random principal submatrices") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 4 + rng() % 9;
    const Matrix m = random_symmetric(rng, n);
    auto rows = testing::random_permutation(rng, n);
    rows.resize(1 + rng() % n);
    std::sort(rows.begin(), rows.end());
    CHECK(interlacing_check(m, rows));
  }
  const Matrix m{{2, 1}, {1, 2}};
  const std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS(interlacing_check(m, bad));
}
