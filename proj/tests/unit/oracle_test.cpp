#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "corpus.hpp"
#include "eigenpairs.hpp"
#include "polyspec/error.hpp"
#include "polyspec/oracle.hpp"

namespace polyspec::oracle {
namespace {

using polyspec::testing::acceptance_corpus;
using polyspec::testing::complete_graph;
using polyspec::testing::cycle_graph;
using polyspec::testing::path_graph;
using polyspec::testing::star_graph;

TEST(NormalizedLaplacian, TraceAndSymmetry) {
  for (const auto& [name, g] : acceptance_corpus()) {
    const auto m = normalized_laplacian(g);
    EXPECT_EQ(m.trace(), static_cast<double>(g.vertex_count())) << name;
    EXPECT_EQ(m.asymmetry(), 0.0) << name;
  }
}

TEST(EigSym, ClosedFormSpectra) {
  // Cycle C_n: 1 - cos(2 pi j / n).
  for (std::size_t n : {3u, 5u, 8u, 13u}) {
    auto got = eig_sym(normalized_laplacian(cycle_graph(n)));
    std::vector<double> want;
    for (std::size_t j = 0; j < n; ++j) want.push_back(1.0 - std::cos(2.0 * M_PI * j / n));
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
  }
  // Star: 0, 1 (leaves - 1 times), 2.
  auto star = eig_sym(normalized_laplacian(star_graph(6)));
  EXPECT_NEAR(star.front(), 0.0, 1e-13);
  EXPECT_NEAR(star.back(), 2.0, 1e-13);
  for (std::size_t i = 1; i + 1 < star.size(); ++i) EXPECT_NEAR(star[i], 1.0, 1e-13);
}

TEST(EigSym, TraceAndRange) {
  for (const auto& [name, g] : acceptance_corpus()) {
    for (int n : {1, 2, 3}) {
      const Graph t = n == 1 ? g : polygon_transform(g, n);
      const auto m = normalized_laplacian(t);
      const auto values = eig_sym(m);
      double sum = 0.0;
      for (double v : values) sum += v;
      EXPECT_NEAR(sum, m.trace(), 1e-9 * static_cast<double>(m.order())) << name;
      EXPECT_NEAR(values.front(), 0.0, 1e-10) << name;
      EXPECT_GE(values.front(), -1e-10);
      EXPECT_LE(values.back(), 2.0 + 1e-10);
    }
  }
}

TEST(EigSym, SquareCycle) {
  const auto v = eig_sym(normalized_laplacian(cycle_graph(4)));
  const std::vector<double> want{0.0, 1.0, 1.0, 2.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(v[i], want[i], 1e-14);
}

TEST(EigSym, AgreesWithEigen) {
  for (const auto& [name, g] : acceptance_corpus()) {
    const auto ours = eig_sym(normalized_laplacian(g));
    const auto theirs = polyspec::testing::normalized_laplacian_eigenpairs(g);
    ASSERT_EQ(ours.size(), theirs.size());
    for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_NEAR(ours[i], theirs[i].value, 1e-12) << name;
  }
}

TEST(EigSym, RandomSymmetricMatrices) {
  std::mt19937 rng(4);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 5 + static_cast<std::size_t>(trial) * 4;
    Eigen::MatrixXd a(n, n);
    DenseSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const double v = gauss(rng);
        m(i, j) = m(j, i) = v;
        a(i, j) = a(j, i) = v;
      }
    }
    const auto ours = eig_sym(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ours[i], solver.eigenvalues()(i), 1e-11);
  }
}

TEST(EigSym, RejectsAsymmetric) {
  DenseSymMatrix m(2, {1.0, 0.5, 0.4, 1.0});
  EXPECT_THROW(eig_sym(m), InputError);
  EXPECT_THROW(DenseSymMatrix(2, {1.0}), InputError);
}

TEST(MatrixTree, KnownCounts) {
  // Cayley: K_n has n^{n-2} trees.
  for (std::size_t n = 2; n <= 9; ++n) {
    EXPECT_EQ(matrix_tree_count(complete_graph(n)), pow_big(n, n - 2)) << n;
  }
  EXPECT_EQ(matrix_tree_count(complete_graph(4)), 16);
  EXPECT_EQ(matrix_tree_count(cycle_graph(7)), 7);
  EXPECT_EQ(matrix_tree_count(path_graph(9)), 1);
  EXPECT_EQ(matrix_tree_count(polyspec::testing::petersen_graph()), 2000);
  EXPECT_EQ(matrix_tree_count(iterate_transform(complete_graph(3), 2, 1)), 54);
  EXPECT_EQ(matrix_tree_count(iterate_transform(complete_graph(3), 2, 2)), 209952);
}

TEST(MatrixTree, IndependentOfDeletedVertex) {
  std::mt19937 rng(12);
  for (const auto& [name, g] : acceptance_corpus()) {
    const BigInt first = matrix_tree_count(g, 0);
    for (int k = 0; k < 3; ++k) {
      const std::size_t v = rng() % g.vertex_count();
      EXPECT_EQ(matrix_tree_count(g, v), first) << name << " v=" << v;
    }
  }
}

TEST(MatrixTree, CapAndRange) {
  EXPECT_THROW(matrix_tree_count(complete_graph(5), 0, 4), CapExceeded);
  EXPECT_THROW(matrix_tree_count(complete_graph(5), 5), InputError);
}

TEST(Bareiss, SmallDeterminants) {
  EXPECT_EQ(bareiss_determinant({}, 0), 1);
  EXPECT_EQ(bareiss_determinant({BigInt(7)}, 1), 7);
  EXPECT_EQ(bareiss_determinant({BigInt(0), BigInt(1), BigInt(1), BigInt(0)}, 2), -1);
  EXPECT_EQ(bareiss_determinant({BigInt(2), BigInt(4), BigInt(1), BigInt(2)}, 2), 0);
  std::vector<BigInt> m{2, -1, 0, -1, 2, -1, 0, -1, 2};
  EXPECT_EQ(bareiss_determinant(m, 3), 4);
}

TEST(Bareiss, AgreesWithEigenOnRandomIntegers) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 7;
    std::vector<BigInt> m(n * n);
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n * n; ++i) {
      const int v = entry(rng);
      m[i] = v;
      a(static_cast<Eigen::Index>(i / n), static_cast<Eigen::Index>(i % n)) = v;
    }
    EXPECT_NEAR(bareiss_determinant(m, n).get_d(), a.determinant(), 1e-6);
  }
}

TEST(CompareSpectra, Behaviour) {
  const auto ok = compare_spectra({0.0, 1.0, 2.0}, {2.0, 1.0 + 1e-10, 0.0}, 1e-8);
  EXPECT_TRUE(ok.matched);
  EXPECT_NEAR(ok.max_abs_deviation, 1e-10, 1e-15);
  EXPECT_FALSE(compare_spectra({0.0, 1.0}, {0.0, 1.1}, 1e-8).matched);
  const auto sizes = compare_spectra({0.0}, {0.0, 1.0}, 1e-8);
  EXPECT_FALSE(sizes.matched);
  EXPECT_EQ(sizes.size_a, 1u);
  EXPECT_EQ(sizes.size_b, 2u);
}

}  // namespace
}  // namespace polyspec::oracle
