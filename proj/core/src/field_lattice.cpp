#include "qpflow/field_lattice.hpp"

#include <algorithm>

namespace qpflow {

namespace {

std::vector<FieldElement> rows_to_elements(NumberField const& field, RatMatrix const& rows) {
  std::vector<FieldElement> out;
  out.reserve(rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) out.push_back(field.element(rows.row_vector(i)));
  return out;
}

IntMatrix scale_to_integer(RatMatrix const& m, Integer const& d) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational const v = m(i, j) * d;
      r(i, j) = v.get_num();
    }
  return r;
}

RatMatrix dual(RatMatrix const& m) {
  auto const inv = inverse(m);
  if (!inv) throw InvalidArgument("dual of a singular lattice");
  return inv->transpose();
}

RatMatrix stack(RatMatrix const& a, RatMatrix const& b) {
  auto rows = a.to_rows();
  auto more = b.to_rows();
  rows.insert(rows.end(), more.begin(), more.end());
  return RatMatrix::from_rows(rows);
}

// Canonical full-rank basis (square) of the lattice spanned by any rows.
RatMatrix canonical_rows(RatMatrix const& rows) {
  Integer const d = common_denominator(rows);
  IntMatrix const h = hnf(scale_to_integer(rows, d));
  RatMatrix out = to_rational(h);
  Rational const inv = make_rational(1, d);
  return inv * out;
}

}  // namespace

FieldLattice::FieldLattice(std::vector<FieldElement> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw InvalidArgument("lattice basis is empty");
  for (auto const& b : basis_) require_same_field(basis_.front(), b);
  std::size_t const n = static_cast<std::size_t>(field().degree());
  if (basis_.size() != n) {
    throw InvalidArgument("lattice basis must have as many elements as the field degree");
  }
  RatMatrix const coords = coordinate_matrix();
  if (qpflow::rank(coords) != n) throw InvalidArgument("lattice basis is rationally dependent");
  Integer d = common_denominator(coords);
  IntMatrix h = hnf(scale_to_integer(coords, d));
  Integer g = d;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (auto const& e : h.row(i)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g != 1) {
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) /= g;
    d /= g;
  }
  hnf_ = std::move(h);
  denominator_ = std::move(d);
}

FieldLattice FieldLattice::from_coordinates(NumberField const& field, RatMatrix const& rows) {
  return FieldLattice(rows_to_elements(field, rows));
}

RatMatrix FieldLattice::coordinate_matrix() const {
  std::size_t const n = static_cast<std::size_t>(field().degree());
  RatMatrix m(basis_.size(), n);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = basis_[i].coord(j);
  return m;
}

RatMatrix FieldLattice::canonical_matrix() const {
  return make_rational(1, denominator_) * to_rational(hnf_);
}

bool FieldLattice::contains(FieldElement const& x) const {
  require_same_field(basis_.front(), x);
  IntVector v;
  v.reserve(x.coords().size());
  for (auto const& c : x.coords()) {
    Rational const s = c * denominator_;
    if (!is_integer(s)) return false;
    v.push_back(s.get_num());
  }
  return hnf_contains(hnf_, std::move(v));
}

FieldLattice FieldLattice::triangular() const {
  std::size_t const n = hnf_.cols();
  std::vector<IntVector> reversed;
  for (std::size_t i = 0; i < hnf_.rows(); ++i) {
    IntVector r(hnf_.row(i).begin(), hnf_.row(i).end());
    std::reverse(r.begin(), r.end());
    reversed.push_back(std::move(r));
  }
  IntMatrix const h = hnf(reversed);
  RatMatrix rows(h.rows(), n);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows(h.rows() - 1 - i, j) = make_rational(h(i, n - 1 - j), denominator_);
    }
  return from_coordinates(field(), rows);
}

RatMatrix multiplication_matrix(FieldElement const& x, std::span<FieldElement const> basis) {
  std::size_t const n = static_cast<std::size_t>(x.field().degree());
  if (basis.size() != n) throw InvalidArgument("basis must have field-degree many elements");
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_field(x, basis[i]);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = basis[i].coord(j);
  }
  auto const a_inv = inverse(a);
  if (!a_inv) throw InvalidArgument("basis is rationally dependent");
  // x a_i has coordinates (A P)_i with P the power-basis matrix of x; solve
  // M A = A P.
  return a * power_basis_matrix(x) * *a_inv;
}

bool lattice_contains(FieldLattice const& lattice, FieldElement const& x) {
  return lattice.contains(x);
}

FieldLattice lattice_sum(FieldLattice const& a, FieldLattice const& b) {
  require_same_field(a.basis().front(), b.basis().front());
  return FieldLattice::from_coordinates(
      a.field(), canonical_rows(stack(a.canonical_matrix(), b.canonical_matrix())));
}

FieldLattice lattice_intersection(FieldLattice const& a, FieldLattice const& b) {
  require_same_field(a.basis().front(), b.basis().front());
  RatMatrix const dual_sum =
      canonical_rows(stack(dual(a.canonical_matrix()), dual(b.canonical_matrix())));
  return FieldLattice::from_coordinates(a.field(), canonical_rows(dual(dual_sum)));
}

FieldLattice scale(FieldLattice const& lattice, FieldElement const& x) {
  if (x.is_zero()) throw InvalidArgument("scaling a lattice by zero");
  std::vector<FieldElement> b;
  b.reserve(lattice.rank());
  for (auto const& e : lattice.basis()) b.push_back(x * e);
  return FieldLattice(std::move(b));
}

FieldLattice coefficient_order(FieldLattice const& lattice) {
  // {x : x a_i in L} = a_i^{-1} L; the order is the intersection over i.
  auto const& basis = lattice.basis();
  FieldLattice result = scale(lattice, inverse(basis.front()));
  for (std::size_t i = 1; i < basis.size(); ++i) {
    result = lattice_intersection(result, scale(lattice, inverse(basis[i])));
  }
  return result.triangular();
}

bool is_order(FieldLattice const& lattice) {
  if (!lattice.contains(lattice.field().one())) return false;
  auto const& b = lattice.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      if (!lattice.contains(b[i] * b[j])) return false;
    }
  return true;
}

}  // namespace qpflow
