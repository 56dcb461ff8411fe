#pragma once

#include <string>
#include <vector>

#include "polyspec/a_series.hpp"
#include "polyspec/polynomial.hpp"

namespace polyspec {

/// The fixed polynomial families whose roots are structural eigenvalues of a
/// polygon graph. With m = (n-1)/2 for odd n and k = n/2 for even n:
///   OddZero   a_m            EvenPlus  a_k + a_{k-1}
///   OddPlus   a_m + a_{m-1}  EvenZero  a_{k-1}
///   OddMinus  a_m - a_{m-1}  EvenMinus a_k - a_{k-2}
enum class FamilyKind { OddZero, OddPlus, OddMinus, EvenPlus, EvenZero, EvenMinus };

struct RootFamily {
  FamilyKind kind = FamilyKind::OddZero;
  int n = 3;
};

const char* to_string(FamilyKind kind);

/// Sorted real roots in (0, 2) of one polynomial, with numeric Vieta sums
/// taken over the found roots.
struct RootSet {
  std::string label;
  int degree = 0;
  std::vector<double> roots;
  double reciprocal_sum = 0.0;
  double product = 1.0;
};

/// Throws InputError when the family's parity does not match n or n < 2.
std::vector<ASeriesTerm> family_terms(const RootFamily& family);
Polynomial family_polynomial(const RootFamily& family);

/// Cleared-denominator form f(x) of 1 - P(x)/Q(x) = lambda:
///   odd n:  a_{m+1} - a_{m-1} - (1-lambda)(a_m - a_{m-2})
///   even n: a_k - a_{k-1} - (1-lambda)(a_{k-1} - a_{k-2})
/// Degree (n+1)/2 for odd n, n/2 for even n.
std::vector<ASeriesTerm> lambda_equation_terms(int n, const Rational& lambda);
Polynomial lambda_polynomial(int n, const Rational& lambda);

RootSet roots_of_family(const RootFamily& family);

/// Roots of the lambda equation; lambda must lie strictly inside (0, 2).
RootSet solve_lambda_equation(int n, double lambda);

struct VietaSums {
  Rational reciprocal_sum;
  Rational product;
};

/// product = (-1)^deg b_0 / b_deg, reciprocal_sum = -b_1 / b_0.
/// Throws InputError when b_0 == 0 or the polynomial is zero.
VietaSums vieta_sums(const Polynomial& poly);

}  // namespace polyspec
