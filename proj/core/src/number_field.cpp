#include "qpflow/number_field.hpp"

#include <sstream>
#include <utility>

#include "qpflow/irreducible.hpp"

namespace qpflow {

struct NumberField::Data {
  IntPoly min_poly;
  int root_index = 0;
  int degree = 0;
  Interval root;
  // The root interval refined once at construction; enclosures start here.
  Interval fine_root;
  // Power-basis coordinates of g^(n+k), k = 0 .. n-2.
  std::vector<std::vector<Rational>> high_powers;
};

namespace {

Rational const& fine_width() {
  static Rational const w(Integer(1), Integer(1) << 64);
  return w;
}

}  // namespace

NumberField NumberField::make(IntPoly const& min_poly, int which_root) {
  if (min_poly.degree() < 2 || min_poly.degree() > kMaxFieldDegree) {
    throw InvalidArgument("field degree must lie in [2, 6]");
  }
  if (!min_poly.is_monic()) throw InvalidArgument("minimal polynomial must be monic");
  if (!poly_irreducible(min_poly)) {
    throw InvalidArgument("minimal polynomial is reducible: " + to_string(min_poly));
  }
  auto const roots = isolate_real_roots(min_poly);
  if (roots.empty()) throw InvalidArgument("minimal polynomial has no real root");
  if (which_root < 0 || static_cast<std::size_t>(which_root) >= roots.size()) {
    throw InvalidArgument("root index out of range: polynomial has " +
                          std::to_string(roots.size()) + " real roots");
  }
  auto data = std::make_shared<Data>();
  data->min_poly = min_poly;
  data->root_index = which_root;
  data->degree = min_poly.degree();
  data->root = roots[static_cast<std::size_t>(which_root)];
  data->fine_root = refine_root(min_poly, data->root, fine_width());

  std::size_t const n = static_cast<std::size_t>(data->degree);
  // g^n = -sum_{k<n} m_k g^k
  std::vector<Rational> current(n);
  for (std::size_t k = 0; k < n; ++k) current[k] = -Rational(min_poly.coefficient(static_cast<int>(k)));
  for (std::size_t extra = 0; extra + 1 < n; ++extra) {
    data->high_powers.push_back(current);
    // multiply by g
    std::vector<Rational> next(n, Rational(0));
    Rational const top = current[n - 1];
    for (std::size_t k = n - 1; k >= 1; --k) next[k] = current[k - 1];
    for (std::size_t k = 0; k < n; ++k) next[k] -= top * Rational(min_poly.coefficient(static_cast<int>(k)));
    current = std::move(next);
  }
  return NumberField(std::move(data));
}

NumberField make_field(IntPoly const& min_poly, int which_root) {
  return NumberField::make(min_poly, which_root);
}

int NumberField::degree() const { return data_->degree; }
IntPoly const& NumberField::min_poly() const { return data_->min_poly; }
int NumberField::root_index() const { return data_->root_index; }
Interval const& NumberField::root_interval() const { return data_->root; }

FieldElement NumberField::zero() const {
  return FieldElement(*this, std::vector<Rational>(static_cast<std::size_t>(degree()), Rational(0)));
}
FieldElement NumberField::one() const { return from_rational(1); }
FieldElement NumberField::generator() const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
  c[1] = 1;
  return FieldElement(*this, std::move(c));
}
FieldElement NumberField::from_rational(Rational const& q) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
  c[0] = q;
  return FieldElement(*this, std::move(c));
}
FieldElement NumberField::element(std::vector<Rational> coords) const {
  return FieldElement(*this, std::move(coords));
}

Interval NumberField::enclose_generator(Rational const& max_width) const {
  if (data_->fine_root.width() <= max_width) return data_->fine_root;
  return refine_root(data_->min_poly, data_->fine_root, max_width);
}

bool operator==(NumberField const& a, NumberField const& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->root_index == b.data_->root_index && a.data_->min_poly == b.data_->min_poly;
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(field_.degree())) {
    throw InvalidArgument("element has " + std::to_string(coords_.size()) +
                          " coordinates, field degree is " + std::to_string(field_.degree()));
  }
}

bool FieldElement::is_zero() const {
  for (auto const& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t k = 1; k < coords_.size(); ++k) {
    if (coords_[k] != 0) return false;
  }
  return true;
}

void require_same_field(FieldElement const& a, FieldElement const& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
}

bool operator==(FieldElement const& a, FieldElement const& b) {
  return a.field_ == b.field_ && a.coords_ == b.coords_;
}

FieldElement operator+(FieldElement const& a, FieldElement const& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coords_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coords_[k];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(FieldElement const& a, FieldElement const& b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coords_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= b.coords_[k];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(FieldElement const& a) {
  std::vector<Rational> c = a.coords_;
  for (auto& x : c) x = -x;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(Rational const& s, FieldElement const& a) {
  std::vector<Rational> c = a.coords_;
  for (auto& x : c) x *= s;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(FieldElement const& a, FieldElement const& b) {
  require_same_field(a, b);
  std::size_t const n = a.coords_.size();
  std::vector<Rational> full(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) full[i + j] += a.coords_[i] * b.coords_[j];
  }
  auto const& high = a.field_.data_->high_powers;
  std::vector<Rational> c(full.begin(), full.begin() + static_cast<long>(n));
  for (std::size_t k = n; k < full.size(); ++k) {
    if (full[k] == 0) continue;
    auto const& reduced = high[k - n];
    for (std::size_t j = 0; j < n; ++j) c[j] += full[k] * reduced[j];
  }
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator/(FieldElement const& a, FieldElement const& b) {
  return a * inverse(b);
}

FieldElement inverse(FieldElement const& x) {
  if (x.is_zero()) throw InvalidArgument("inverse of zero");
  // Extended Euclid: track s with s * x == r (mod min_poly).
  RatPoly r0 = to_rational(x.field().min_poly());
  RatPoly r1(std::vector<Rational>(x.coords().begin(), x.coords().end()));
  RatPoly s0;
  RatPoly s1 = RatPoly::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = divrem(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant because min_poly is irreducible.
  Rational const scale = 1 / r1.coefficient(0);
  std::vector<Rational> c(static_cast<std::size_t>(x.field().degree()), Rational(0));
  for (int k = 0; k <= s1.degree(); ++k) c[static_cast<std::size_t>(k)] = s1.coefficient(k) * scale;
  return FieldElement(x.field(), std::move(c));
}

FieldElement pow(FieldElement const& x, long exponent) {
  FieldElement base = exponent < 0 ? inverse(x) : x;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  FieldElement result = x.field().one();
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

RatMatrix power_basis_matrix(FieldElement const& x) {
  std::size_t const n = static_cast<std::size_t>(x.field().degree());
  RatMatrix m(n, n);
  FieldElement const g = x.field().generator();
  FieldElement row = x;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row.coord(j);
    if (i + 1 < n) row = row * g;
  }
  return m;
}

RatPoly characteristic_polynomial(FieldElement const& x) {
  return characteristic_polynomial(power_basis_matrix(x));
}

RatPoly minimal_polynomial(FieldElement const& x) {
  // The characteristic polynomial is a power of the minimal polynomial, so
  // its squarefree part is the minimal polynomial itself.
  return squarefree_part(characteristic_polynomial(x));
}

bool is_algebraic_integer(FieldElement const& x) {
  return to_integer(minimal_polynomial(x)).has_value();
}

Rational norm(FieldElement const& x) { return det(power_basis_matrix(x)); }

Rational trace(FieldElement const& x) {
  RatMatrix const m = power_basis_matrix(x);
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

bool is_unit(FieldElement const& x) {
  return is_algebraic_integer(x) && abs(norm(x)) == 1;
}

namespace {

Interval evaluate_at(FieldElement const& x, Interval const& g) {
  RatPoly const p(std::vector<Rational>(x.coords().begin(), x.coords().end()));
  return evaluate(p, g);
}

}  // namespace

Interval enclose(FieldElement const& x, Rational const& max_width) {
  if (x.is_rational()) return {x.coord(0), x.coord(0)};
  Rational w = fine_width();
  if (max_width < w) w = max_width;
  while (true) {
    Interval const value = evaluate_at(x, x.field().enclose_generator(w));
    if (value.width() <= max_width) return value;
    w /= Rational(Integer(1) << 32);
  }
}

int sign(FieldElement const& x) {
  if (x.is_zero()) return 0;
  Rational w = fine_width();
  while (true) {
    Interval const value = evaluate_at(x, x.field().enclose_generator(w));
    if (value.lo > 0) return 1;
    if (value.hi < 0) return -1;
    w /= Rational(Integer(1) << 32);
  }
}

int compare(FieldElement const& a, FieldElement const& b) { return sign(a - b); }

Rational approximate(FieldElement const& x, int digits) {
  Integer const scale = pow10(static_cast<unsigned>(digits));
  Interval const value = enclose(x, make_rational(1, scale * 100));
  return make_rational(round_nearest(value.midpoint() * scale), scale);
}

std::string to_decimal(FieldElement const& x, int digits) {
  return to_decimal(approximate(x, digits), digits);
}

double to_double(FieldElement const& x) { return approximate(x, 25).get_d(); }

std::string to_string(FieldElement const& x, std::string_view generator) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < x.coords().size(); ++k) {
    Rational const& c = x.coord(k);
    if (c == 0) continue;
    Rational const mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << generator;
    if (k > 1) out << '^' << k;
  }
  if (first) return "0";
  return out.str();
}

Rational discriminant(std::span<FieldElement const> basis) {
  std::size_t const n = basis.size();
  RatMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      t(i, j) = trace(basis[i] * basis[j]);
      t(j, i) = t(i, j);
    }
  return det(t);
}

}  // namespace qpflow
