#include "polyspec/roots.hpp"

#include <cmath>

#include "polyspec/error.hpp"

namespace polyspec {

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::OddZero: return "odd_zero";
    case FamilyKind::OddPlus: return "odd_plus";
    case FamilyKind::OddMinus: return "odd_minus";
    case FamilyKind::EvenPlus: return "even_plus";
    case FamilyKind::EvenZero: return "even_zero";
    case FamilyKind::EvenMinus: return "even_minus";
  }
  return "unknown";
}

namespace {

bool is_odd_kind(FamilyKind kind) {
  return kind == FamilyKind::OddZero || kind == FamilyKind::OddPlus ||
         kind == FamilyKind::OddMinus;
}

std::vector<WeightedIndex> to_weighted(const std::vector<ASeriesTerm>& terms) {
  std::vector<WeightedIndex> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    out.push_back({t.coefficient.get_d(), t.index});
  }
  return out;
}

constexpr double kBracketWidth = 1e-14;
constexpr int kBaseSamplesPerDegree = 8;
constexpr int kMaxDensityQuadruplings = 3;

double refine(const std::vector<WeightedIndex>& terms, double lo, double hi, double f_lo) {
  while (hi - lo > kBracketWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const double f_mid = eval_a_combination(terms, mid).value;
    if (f_mid == 0.0) {
      return mid;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  // One Newton step, kept only if it stays inside the bracket.
  const double x = 0.5 * (lo + hi);
  const ValueAndSlope at = eval_a_combination(terms, x);
  if (at.slope != 0.0) {
    const double polished = x - at.value / at.slope;
    if (polished >= lo && polished <= hi) {
      return polished;
    }
  }
  return x;
}

std::vector<double> scan(const std::vector<WeightedIndex>& terms, int samples) {
  std::vector<double> roots;
  double prev_x = 0.0;
  double prev_f = eval_a_combination(terms, 0.0).value;
  for (int s = 1; s <= samples; ++s) {
    const double x = 2.0 * static_cast<double>(s) / static_cast<double>(samples);
    const double f = eval_a_combination(terms, x).value;
    if (f == 0.0) {
      if (x < 2.0) {
        roots.push_back(x);
      }
      // Restart the sign scan just past the exact root.
      prev_x = x;
      prev_f = f;
      continue;
    }
    if (prev_f != 0.0 && (f < 0.0) != (prev_f < 0.0)) {
      roots.push_back(refine(terms, prev_x, x, prev_f));
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

RootSet isolate(std::string label, const std::vector<ASeriesTerm>& terms, int degree) {
  RootSet out;
  out.label = std::move(label);
  out.degree = degree;
  if (degree > 0) {
    const auto weighted = to_weighted(terms);
    int samples = kBaseSamplesPerDegree * degree;
    for (int attempt = 0;; ++attempt) {
      out.roots = scan(weighted, samples);
      if (static_cast<int>(out.roots.size()) == degree) {
        break;
      }
      if (attempt == kMaxDensityQuadruplings) {
        throw InternalError("root isolation for " + out.label + ": found " +
                            std::to_string(out.roots.size()) + " roots, expected " +
                            std::to_string(degree));
      }
      samples *= 4;
    }
  }
  out.reciprocal_sum = 0.0;
  out.product = 1.0;
  for (double r : out.roots) {
    if (!(r > 0.0 && r < 2.0)) {
      throw InternalError("root isolation for " + out.label + ": root outside (0, 2)");
    }
    out.reciprocal_sum += 1.0 / r;
    out.product *= r;
  }
  return out;
}

}  // namespace

std::vector<ASeriesTerm> family_terms(const RootFamily& family) {
  const int n = family.n;
  if (n < 2) {
    throw InputError("root family: n must be >= 2");
  }
  const bool odd = (n % 2) == 1;
  if (odd != is_odd_kind(family.kind)) {
    throw InputError(std::string("root family ") + to_string(family.kind) +
                     ": parity does not match n = " + std::to_string(n));
  }
  const int m = (n - 1) / 2;
  const int k = n / 2;
  switch (family.kind) {
    case FamilyKind::OddZero: return {{Rational(1), m}};
    case FamilyKind::OddPlus: return {{Rational(1), m}, {Rational(1), m - 1}};
    case FamilyKind::OddMinus: return {{Rational(1), m}, {Rational(-1), m - 1}};
    case FamilyKind::EvenPlus: return {{Rational(1), k}, {Rational(1), k - 1}};
    case FamilyKind::EvenZero: return {{Rational(1), k - 1}};
    case FamilyKind::EvenMinus: return {{Rational(1), k}, {Rational(-1), k - 2}};
  }
  throw InputError("root family: unknown kind");
}

Polynomial family_polynomial(const RootFamily& family) {
  return linear_combination(family_terms(family));
}

std::vector<ASeriesTerm> lambda_equation_terms(int n, const Rational& lambda) {
  if (n < 2) {
    throw InputError("lambda equation: n must be >= 2");
  }
  const Rational shift = 1 - lambda;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    return {{Rational(1), m + 1}, {Rational(-1), m - 1}, {-shift, m}, {shift, m - 2}};
  }
  const int k = n / 2;
  return {{Rational(1), k}, {Rational(-1), k - 1}, {-shift, k - 1}, {shift, k - 2}};
}

Polynomial lambda_polynomial(int n, const Rational& lambda) {
  return linear_combination(lambda_equation_terms(n, lambda));
}

RootSet roots_of_family(const RootFamily& family) {
  const auto terms = family_terms(family);
  const Polynomial poly = linear_combination(terms);
  if (poly.is_zero()) {
    throw InternalError("root family polynomial vanishes identically");
  }
  return isolate(std::string(to_string(family.kind)) + "(n=" + std::to_string(family.n) + ")",
                 terms, poly.degree());
}

RootSet solve_lambda_equation(int n, double lambda) {
  if (!(lambda > 0.0 && lambda < 2.0)) {
    throw InputError("lambda equation: lambda must lie strictly inside (0, 2)");
  }
  const auto terms = lambda_equation_terms(n, to_rational(lambda));
  const int degree = (n % 2 == 1) ? (n + 1) / 2 : n / 2;
  return isolate("lambda(n=" + std::to_string(n) + ", " + format_double(lambda) + ")", terms,
                 degree);
}

VietaSums vieta_sums(const Polynomial& poly) {
  if (poly.is_zero()) {
    throw InputError("vieta_sums: zero polynomial");
  }
  const Rational b0 = poly.coeff(0);
  if (sgn(b0) == 0) {
    throw InputError("vieta_sums: constant coefficient is zero (zero root)");
  }
  const int deg = poly.degree();
  VietaSums out;
  out.product = b0 / poly.coeffs().back();
  if (deg % 2 == 1) {
    out.product = -out.product;
  }
  out.reciprocal_sum = -poly.coeff(1) / b0;
  out.product.canonicalize();
  out.reciprocal_sum.canonicalize();
  return out;
}

}  // namespace polyspec
