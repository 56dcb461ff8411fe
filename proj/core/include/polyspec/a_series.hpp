#pragma once

// The series a_{-1} = 0, a_0 = 1, a_k(mu) = 2(1 - mu) a_{k-1}(mu) - a_{k-2}(mu).
//
// a_k is a degree-k polynomial in mu (a Chebyshev polynomial of the second
// kind in 1 - mu). Eigenvalues of polygon graphs are roots of small integer
// combinations of consecutive a_k, so everything downstream is phrased in
// terms of `ASeriesTerm` lists.

#include <span>
#include <vector>

#include "polyspec/numeric.hpp"
#include "polyspec/polynomial.hpp"

namespace polyspec {

double eval_a(int index, double mu);
Rational eval_a(int index, const Rational& mu);

/// Integer coefficients of a_index(mu); coeffs[i] multiplies mu^i.
/// For index -1 the coefficient vector is empty (zero polynomial).
struct ASeriesPoly {
  int index = 0;
  std::vector<BigInt> coeffs;

  Polynomial to_polynomial() const;
};

ASeriesPoly coeffs_a(int index);

/// One term c * a_index(mu) of a linear combination.
struct ASeriesTerm {
  Rational coefficient;
  int index = 0;
};

/// Exact coefficients of sum_k c_k a_{i_k}(mu), trailing zeros trimmed.
Polynomial linear_combination(std::span<const ASeriesTerm> terms);

/// The same combination with binary64 weights, evaluated through the
/// recurrence (stable on [0, 2], unlike the monomial expansion).
struct WeightedIndex {
  double weight = 0.0;
  int index = 0;
};

struct ValueAndSlope {
  double value = 0.0;
  double slope = 0.0;
};

ValueAndSlope eval_a_combination(std::span<const WeightedIndex> terms, double mu);

}  // namespace polyspec
