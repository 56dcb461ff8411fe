#pragma once

// Brute-force ground truth. Nothing here depends on the a-series, the root
// finder or the spectrum transfer; it only reads the Graph.

#include <cstddef>
#include <vector>

#include "polyspec/graph.hpp"
#include "polyspec/numeric.hpp"

namespace polyspec::oracle {

/// Dense row-major square matrix that is symmetric by construction.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {}
  DenseSymMatrix(std::size_t order, std::vector<double> entries);

  std::size_t order() const { return order_; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  const std::vector<double>& entries() const { return entries_; }
  double* data() { return entries_.data(); }

  double trace() const;
  /// max |a_ij - a_ji|
  double asymmetry() const;

 private:
  std::size_t order_ = 0;
  std::vector<double> entries_;
};

/// I - D^{-1/2} A D^{-1/2}. The graph must be connected.
DenseSymMatrix normalized_laplacian(const Graph& graph);

/// All eigenvalues, ascending, by cyclic Jacobi rotations. Throws
/// InputError when the matrix is not symmetric to 1e-14.
std::vector<double> eig_sym(DenseSymMatrix matrix);

inline constexpr std::size_t kDefaultTreeCountCap = 400;

/// Number of spanning trees: the determinant of the combinatorial Laplacian
/// with row and column `deleted_vertex` removed, by Bareiss fraction-free
/// elimination. Throws CapExceeded above `vertex_cap` vertices.
BigInt matrix_tree_count(const Graph& graph, std::size_t deleted_vertex = 0,
                         std::size_t vertex_cap = kDefaultTreeCountCap);

/// Fraction-free determinant of a square integer matrix (row-major).
BigInt bareiss_determinant(std::vector<BigInt> entries, std::size_t order);

struct ComparisonReport {
  double max_abs_deviation = 0.0;
  bool matched = false;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

/// Elementwise comparison after ascending sort. Mismatched sizes never match;
/// max_abs_deviation is then taken over the common prefix.
ComparisonReport compare_spectra(std::vector<double> a, std::vector<double> b, double tol);

}  // namespace polyspec::oracle
