#include "qpflow/rational.hpp"

#include <cctype>

#include "qpflow/errors.hpp"

namespace qpflow {

Rational make_rational(Integer const& numerator, Integer const& denominator) {
  if (denominator == 0) {
    throw InvalidArgument("zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Integer floor(Rational const& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(Rational const& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_nearest(Rational const& q) {
  Rational const shifted = q + Rational(1, 2);
  return floor(shifted);
}

bool is_integer(Rational const& q) { return q.get_den() == 1; }

Integer pow10(unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

std::string to_string(Rational const& q) { return q.get_str(); }
std::string to_string(Integer const& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    throw InvalidArgument("malformed integer: '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InvalidArgument("malformed integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto const slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

Decimal parse_decimal(std::string_view text) {
  std::string const original(text);
  auto fail = [&]() -> Decimal {
    throw InvalidArgument("malformed decimal: '" + original + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  int fraction = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    char const c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++fraction;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      return fail();
    }
  }
  if (!seen_digit) return fail();
  long exponent = 0;
  if (i < text.size()) {
    std::string_view const e = text.substr(i + 1);
    if (e.empty()) return fail();
    Integer const z = parse_integer(e);
    if (!z.fits_slong_p() || abs(z) > 100000) return fail();
    exponent = z.get_si();
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long const scale = static_cast<long>(fraction) - exponent;
  Decimal result;
  if (scale >= 0) {
    result.value = make_rational(mantissa, pow10(static_cast<unsigned>(scale)));
    result.fraction_digits = static_cast<int>(scale);
  } else {
    result.value = Rational(mantissa * pow10(static_cast<unsigned>(-scale)));
    result.fraction_digits = 0;
  }
  return result;
}

std::string to_decimal(Rational const& q, int digits) {
  if (digits < 0) digits = 0;
  Integer const scale = pow10(static_cast<unsigned>(digits));
  Integer const scaled = round_nearest(q * scale);
  Integer const magnitude = abs(scaled);
  std::string body = magnitude.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (scaled < 0 ? "-" : "") + body;
}

}  // namespace qpflow
