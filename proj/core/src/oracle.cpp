#include "polyspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyspec/error.hpp"

namespace polyspec::oracle {

DenseSymMatrix::DenseSymMatrix(std::size_t order, std::vector<double> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw InputError("DenseSymMatrix: entry count does not match order");
  }
}

double DenseSymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

double DenseSymMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = i + 1; j < order_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return worst;
}

DenseSymMatrix normalized_laplacian(const Graph& graph) {
  graph.require_connected();
  const std::size_t n = graph.vertex_count();
  DenseSymMatrix m(n);
  std::vector<double> inv_sqrt(n);
  for (std::size_t v = 0; v < n; ++v) {
    inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(graph.degree(static_cast<Vertex>(v))));
    m(v, v) = 1.0;
  }
  for (auto [u, v] : graph.edges()) {
    const double w = -inv_sqrt[u] * inv_sqrt[v];
    m(u, v) = w;
    m(v, u) = w;
  }
  return m;
}

namespace {

constexpr double kSymmetryTolerance = 1e-14;
constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const DenseSymMatrix& a) {
  double sum = 0.0;
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum += 2.0 * a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> eig_sym(DenseSymMatrix a) {
  if (a.asymmetry() > kSymmetryTolerance) {
    throw InputError("eig_sym: matrix is not symmetric");
  }
  const std::size_t n = a.order();
  double* m = a.data();

  // Round-robin ordering: each round is a set of disjoint pairs, so its
  // rotations commute and can be applied as one row pass and one column
  // pass, both walking memory contiguously. n - 1 (or n) rounds visit every
  // pair once per sweep. Index n stands for a bye when n is odd.
  const std::size_t players = n + (n % 2);
  std::vector<std::size_t> seat(players);
  for (std::size_t i = 0; i < players; ++i) {
    seat[i] = i;
  }
  struct Rotation {
    std::size_t p;
    std::size_t q;
    double c;
    double s;
  };
  std::vector<Rotation> round;
  round.reserve(players / 2);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= kOffDiagonalTarget) {
      break;
    }
    // Early sweeps skip rotations far below the average off-diagonal size.
    const double skip_below = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (std::size_t r = 0; r + 1 < players; ++r) {
      round.clear();
      for (std::size_t i = 0; i < players / 2; ++i) {
        std::size_t p = seat[i];
        std::size_t q = seat[players - 1 - i];
        if (p == n || q == n) {
          continue;
        }
        if (p > q) {
          std::swap(p, q);
        }
        const double apq = m[p * n + q];
        if (apq == 0.0 || std::abs(apq) <= skip_below) {
          continue;
        }
        const double theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) {
          t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        round.push_back({p, q, c, t * c});
      }
      if (!round.empty()) {
        for (const auto& rot : round) {
          double* rp = m + rot.p * n;
          double* rq = m + rot.q * n;
          for (std::size_t k = 0; k < n; ++k) {
            const double x = rp[k];
            const double y = rq[k];
            rp[k] = rot.c * x - rot.s * y;
            rq[k] = rot.s * x + rot.c * y;
          }
        }
        for (std::size_t k = 0; k < n; ++k) {
          double* row = m + k * n;
          for (const auto& rot : round) {
            const double x = row[rot.p];
            const double y = row[rot.q];
            row[rot.p] = rot.c * x - rot.s * y;
            row[rot.q] = rot.s * x + rot.c * y;
          }
        }
        for (const auto& rot : round) {
          // Exact values for the entries the rotation was built to produce.
          m[rot.p * n + rot.q] = 0.0;
          m[rot.q * n + rot.p] = 0.0;
        }
      }
      // Circle method: seat 0 stays, the rest rotate by one.
      std::rotate(seat.begin() + 1, seat.end() - 1, seat.end());
    }
  }
  if (off_diagonal_norm(a) > kOffDiagonalTarget) {
    throw InternalError("eig_sym: Jacobi sweeps did not converge");
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = a(i, i);
  }
  std::sort(values.begin(), values.end());
  return values;
}

BigInt bareiss_determinant(std::vector<BigInt> m, std::size_t n) {
  if (m.size() != n * n) {
    throw InputError("bareiss_determinant: entry count does not match order");
  }
  if (n == 0) {
    return BigInt(1);
  }
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
  int sign = 1;
  BigInt prev(1);
  BigInt tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(at(swap_row, k)) == 0) {
        ++swap_row;
      }
      if (swap_row == n) {
        return BigInt(0);
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(at(k, j), at(swap_row, j));
      }
      sign = -sign;
    }
    const BigInt& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt& lead = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        // m_ij = (m_ij * m_kk - m_ik * m_kj) / prev, exact.
        mpz_mul(tmp.get_mpz_t(), at(i, j).get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), at(k, j).get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  BigInt det = at(n - 1, n - 1);
  if (sign < 0) {
    det = -det;
  }
  return det;
}

BigInt matrix_tree_count(const Graph& graph, std::size_t deleted_vertex, std::size_t vertex_cap) {
  graph.require_connected();
  const std::size_t n = graph.vertex_count();
  if (n > vertex_cap) {
    throw CapExceeded("matrix_tree_count: " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(vertex_cap));
  }
  if (deleted_vertex >= n) {
    throw InputError("matrix_tree_count: deleted vertex out of range");
  }
  // Reduced combinatorial Laplacian D - A without row/column deleted_vertex.
  auto slot = [&](std::size_t v) { return v < deleted_vertex ? v : v - 1; };
  const std::size_t order = n - 1;
  std::vector<BigInt> reduced(order * order, BigInt(0));
  for (std::size_t v = 0; v < n; ++v) {
    if (v != deleted_vertex) {
      reduced[slot(v) * order + slot(v)] = static_cast<unsigned long>(graph.degree(static_cast<Vertex>(v)));
    }
  }
  for (auto [u, v] : graph.edges()) {
    if (u == deleted_vertex || v == deleted_vertex) {
      continue;
    }
    reduced[slot(u) * order + slot(v)] = -1;
    reduced[slot(v) * order + slot(u)] = -1;
  }
  return bareiss_determinant(std::move(reduced), order);
}

ComparisonReport compare_spectra(std::vector<double> a, std::vector<double> b, double tol) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  ComparisonReport report;
  report.size_a = a.size();
  report.size_b = b.size();
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(a[i] - b[i]));
  }
  report.matched = a.size() == b.size() && report.max_abs_deviation <= tol;
  return report;
}

}  // namespace polyspec::oracle
