#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpflow/matrix.hpp"
#include "qpflow/polynomial.hpp"
#include "qpflow/real_roots.hpp"

namespace qpflow {

inline constexpr int kMaxFieldDegree = 6;

class FieldElement;

// A real number field Q(g) presented by the monic irreducible minimal
// polynomial of g together with an isolating interval that picks out which
// real root g is.  Cheap to copy; all copies share one immutable record.
class NumberField {
 public:
  // Root `which_root` counts the real roots of min_poly in ascending order.
  static NumberField make(IntPoly const& min_poly, int which_root);

  int degree() const;
  IntPoly const& min_poly() const;
  int root_index() const;
  // Isolating interval of g as found by root isolation.
  Interval const& root_interval() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(Rational const& q) const;
  FieldElement element(std::vector<Rational> coords) const;

  // Enclosure of g of width at most max_width.
  Interval enclose_generator(Rational const& max_width) const;

  // Structural equality: same minimal polynomial and same root.
  friend bool operator==(NumberField const& a, NumberField const& b);

 private:
  struct Data;
  explicit NumberField(std::shared_ptr<Data const> data) : data_(std::move(data)) {}
  friend class FieldElement;
  friend FieldElement operator*(FieldElement const& a, FieldElement const& b);

  std::shared_ptr<Data const> data_;
};

// Checked factory with the field invariants: monic, irreducible, degree in
// [2, kMaxFieldDegree], and which_root a valid real root index.
NumberField make_field(IntPoly const& min_poly, int which_root);

// An element sum_k coords[k] g^k of a number field.
class FieldElement {
 public:
  FieldElement(NumberField field, std::vector<Rational> coords);

  NumberField const& field() const { return field_; }
  std::span<Rational const> coords() const { return coords_; }
  Rational const& coord(std::size_t k) const { return coords_[k]; }
  bool is_zero() const;
  bool is_rational() const;

  friend bool operator==(FieldElement const& a, FieldElement const& b);

  friend FieldElement operator+(FieldElement const& a, FieldElement const& b);
  friend FieldElement operator-(FieldElement const& a, FieldElement const& b);
  friend FieldElement operator-(FieldElement const& a);
  friend FieldElement operator*(FieldElement const& a, FieldElement const& b);
  friend FieldElement operator*(Rational const& s, FieldElement const& a);
  friend FieldElement operator/(FieldElement const& a, FieldElement const& b);

 private:
  NumberField field_;
  std::vector<Rational> coords_;
};

void require_same_field(FieldElement const& a, FieldElement const& b);

FieldElement inverse(FieldElement const& x);
FieldElement pow(FieldElement const& x, long exponent);

// Matrix of multiplication by x on the power basis: row k holds the
// coordinates of x * g^k.
RatMatrix power_basis_matrix(FieldElement const& x);

RatPoly characteristic_polynomial(FieldElement const& x);
// Monic minimal polynomial of x over the rationals.
RatPoly minimal_polynomial(FieldElement const& x);
bool is_algebraic_integer(FieldElement const& x);
Rational norm(FieldElement const& x);
Rational trace(FieldElement const& x);
bool is_unit(FieldElement const& x);

// Sign of the real value of x under the embedding fixed by the field.
int sign(FieldElement const& x);
// sign(a - b)
int compare(FieldElement const& a, FieldElement const& b);

// Enclosure of the real value of x of width at most max_width.
Interval enclose(FieldElement const& x, Rational const& max_width);
// Value rounded to `digits` fraction digits.
Rational approximate(FieldElement const& x, int digits);
std::string to_decimal(FieldElement const& x, int digits);
double to_double(FieldElement const& x);

// Polynomial rendering in the generator, e.g. "1/2 + 1/2*g".
std::string to_string(FieldElement const& x, std::string_view generator = "g");

// Discriminant det(trace(b_i b_j)) of a Q-basis of the field.
Rational discriminant(std::span<FieldElement const> basis);

}  // namespace qpflow
