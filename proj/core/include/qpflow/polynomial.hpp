#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpflow/rational.hpp"

namespace qpflow {

// Dense univariate polynomial, coefficients in ascending degree order.  The
// trailing coefficient is nonzero except for the zero polynomial, which has
// no coefficients and degree -1.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }
  Polynomial(std::initializer_list<Coeff> coefficients)
      : coefficients_(coefficients) {
    trim();
  }

  static Polynomial constant(Coeff c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(Coeff c, int degree) {
    std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, Coeff(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_monic() const { return !is_zero() && coefficients_.back() == 1; }

  // Coefficient of z^i; zero beyond the degree.
  Coeff coefficient(int i) const {
    if (i < 0 || i > degree()) return Coeff(0);
    return coefficients_[static_cast<std::size_t>(i)];
  }
  Coeff const& leading() const { return coefficients_.back(); }
  std::vector<Coeff> const& coefficients() const { return coefficients_; }

  Polynomial derivative() const {
    if (degree() < 1) return Polynomial();
    std::vector<Coeff> d(coefficients_.size() - 1);
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
      d[i - 1] = coefficients_[i] * static_cast<long>(i);
    }
    return Polynomial(std::move(d));
  }

  // Horner evaluation at a value of any ring containing the coefficients.
  template <typename Value>
  Value evaluate(Value const& x) const {
    Value acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = acc * x;
      acc = acc + Value(*it);
    }
    return acc;
  }

  friend bool operator==(Polynomial const&, Polynomial const&) = default;

  friend Polynomial operator+(Polynomial const& a, Polynomial const& b) {
    std::vector<Coeff> r(std::max(a.coefficients_.size(), b.coefficients_.size()),
                         Coeff(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) r[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) r[i] += b.coefficients_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(Polynomial const& a) {
    std::vector<Coeff> r(a.coefficients_);
    for (auto& c : r) c = -c;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(Polynomial const& a, Polynomial const& b) {
    return a + (-b);
  }
  friend Polynomial operator*(Polynomial const& a, Polynomial const& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Coeff> r(a.coefficients_.size() + b.coefficients_.size() - 1,
                         Coeff(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
        r[i + j] += a.coefficients_[i] * b.coefficients_[j];
      }
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Coeff const& s, Polynomial const& a) {
    std::vector<Coeff> r(a.coefficients_);
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
      coefficients_.pop_back();
    }
  }

  std::vector<Coeff> coefficients_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

RatPoly to_rational(IntPoly const& p);
// Defined only when every coefficient is an integer.
std::optional<IntPoly> to_integer(RatPoly const& p);

// Euclidean division over the rationals; throws on a zero divisor.
std::pair<RatPoly, RatPoly> divrem(RatPoly const& a, RatPoly const& b);
RatPoly make_monic(RatPoly const& p);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly const& a, RatPoly const& b);
RatPoly squarefree_part(RatPoly const& p);

// Gcd of the coefficients, sign ignored; content(0) = 0.
Integer content(IntPoly const& p);
// p / content(p), normalized to a positive leading coefficient.
IntPoly primitive_part(IntPoly const& p);
// Clears denominators, then takes the primitive part.
IntPoly primitive_part(RatPoly const& p);

// Quotient of an exact division in Z[z], if there is one.
std::optional<IntPoly> divide_exact(IntPoly const& p, IntPoly const& q);

// Largest absolute value of a coefficient.
Integer height(IntPoly const& p);

// Human-readable form, highest degree first, e.g. "z^4 - 10*z^2 + 1".
std::string to_string(IntPoly const& p, std::string_view var = "z");
std::string to_string(RatPoly const& p, std::string_view var = "z");

}  // namespace qpflow
