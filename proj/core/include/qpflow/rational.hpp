#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpflow {

using Integer = mpz_class;
// mpq_class keeps values in lowest terms with a positive denominator as long
// as every constructed value is canonicalized; make_rational does that.
using Rational = mpq_class;

Rational make_rational(Integer const& numerator, Integer const& denominator);

Integer floor(Rational const& q);
Integer ceil(Rational const& q);
// Nearest integer, ties rounded towards +infinity.
Integer round_nearest(Rational const& q);

bool is_integer(Rational const& q);
Integer pow10(unsigned exponent);

// "p/q", or "p" when q = 1.
std::string to_string(Rational const& q);
std::string to_string(Integer const& z);

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

struct Decimal {
  Rational value;
  // Number of digits after the decimal point (or implied by an exponent).
  int fraction_digits = 0;
};

// Exact value of a decimal literal such as "-3.14159", "2", "1.5e-3".
Decimal parse_decimal(std::string_view text);

// Fixed-point rendering with exactly `digits` fraction digits, rounded to
// nearest.
std::string to_decimal(Rational const& q, int digits);

}  // namespace qpflow
