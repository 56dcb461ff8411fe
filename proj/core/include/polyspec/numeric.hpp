#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polyspec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Natural logarithm of a positive big integer, accurate to double precision
/// even when the value itself overflows a double.
double log_of(const BigInt& value);

/// Exact rational image of a finite double.
Rational to_rational(double value);

BigInt pow_big(const BigInt& base, unsigned long exponent);

/// Decimal string ("14/3", "84", "-2").
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// %.17g formatting; round-trips every finite double.
std::string format_double(double value);

}  // namespace polyspec
