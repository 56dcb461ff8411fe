#include "polyspec/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polyspec {

double log_of(const BigInt& value) {
  if (sgn(value) <= 0) {
    throw std::domain_error("log_of: non-positive argument");
  }
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

Rational to_rational(double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("to_rational: non-finite value");
  }
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

BigInt pow_big(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

std::string format_double(double value) {
  if (value == 0.0) {
    return "0";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace polyspec
