#include "polyspec/a_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyspec/error.hpp"

namespace polyspec {

namespace {

void check_index(int index) {
  if (index < -1) {
    throw InputError("a-series index must be >= -1");
  }
}

}  // namespace

double eval_a(int index, double mu) {
  check_index(index);
  if (index == -1) {
    return 0.0;
  }
  const double beta = 2.0 * (1.0 - mu);
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 1; k <= index; ++k) {
    const double next = beta * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational eval_a(int index, const Rational& mu) {
  check_index(index);
  if (index == -1) {
    return Rational(0);
  }
  const Rational beta = 2 * (1 - mu);
  Rational prev(0);
  Rational cur(1);
  for (int k = 1; k <= index; ++k) {
    Rational next = beta * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial ASeriesPoly::to_polynomial() const {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) {
    c.emplace_back(v);
  }
  return Polynomial(std::move(c));
}

ASeriesPoly coeffs_a(int index) {
  check_index(index);
  ASeriesPoly out;
  out.index = index;
  if (index == -1) {
    return out;
  }
  std::vector<BigInt> prev;       // a_{k-2}
  std::vector<BigInt> cur{1};     // a_{k-1}
  for (int k = 1; k <= index; ++k) {
    // a_k = 2 a_{k-1} - 2 mu a_{k-1} - a_{k-2}
    std::vector<BigInt> next(cur.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += 2 * cur[i];
      next[i + 1] -= 2 * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] -= prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  out.coeffs = std::move(cur);
  return out;
}

Polynomial linear_combination(std::span<const ASeriesTerm> terms) {
  Polynomial sum;
  for (const auto& term : terms) {
    check_index(term.index);
    sum += coeffs_a(term.index).to_polynomial() * term.coefficient;
  }
  return sum;
}

ValueAndSlope eval_a_combination(std::span<const WeightedIndex> terms, double mu) {
  int top = -1;
  for (const auto& t : terms) {
    check_index(t.index);
    top = std::max(top, t.index);
  }
  // a_k and d a_k / d mu side by side; slot k+1 holds index k.
  std::vector<double> value(static_cast<std::size_t>(top + 2), 0.0);
  std::vector<double> slope(value.size(), 0.0);
  if (top >= 0) {
    value[1] = 1.0;
  }
  const double beta = 2.0 * (1.0 - mu);
  for (int k = 1; k <= top; ++k) {
    const auto s = static_cast<std::size_t>(k + 1);
    value[s] = beta * value[s - 1] - value[s - 2];
    slope[s] = -2.0 * value[s - 1] + beta * slope[s - 1] - slope[s - 2];
  }
  ValueAndSlope out;
  for (const auto& t : terms) {
    const auto s = static_cast<std::size_t>(t.index + 1);
    out.value += t.weight * value[s];
    out.slope += t.weight * slope[s];
  }
  return out;
}

}  // namespace polyspec
