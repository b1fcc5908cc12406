#pragma once

#include <span>
#include <vector>

#include "qpflow/hnf.hpp"
#include "qpflow/number_field.hpp"

namespace qpflow {

// A full-rank Z-module inside a number field, given by a basis of field
// elements.  Its canonical form is the row HNF of the power-basis coordinate
// matrix after scaling by the least common denominator, reduced so that the
// pair (hnf, denominator) is unique; equality of lattices compares it.
class FieldLattice {
 public:
  // Throws InvalidArgument unless the basis has exactly `degree` rationally
  // independent elements of one field.
  explicit FieldLattice(std::vector<FieldElement> basis);

  // Lattice spanned by the rows of a full-rank power-basis coordinate matrix.
  static FieldLattice from_coordinates(NumberField const& field, RatMatrix const& rows);

  NumberField const& field() const { return basis_.front().field(); }
  std::vector<FieldElement> const& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  // Rows are the power-basis coordinates of the basis elements.
  RatMatrix coordinate_matrix() const;

  IntMatrix const& canonical_hnf() const { return hnf_; }
  Integer const& canonical_denominator() const { return denominator_; }
  // canonical_hnf / canonical_denominator.
  RatMatrix canonical_matrix() const;

  bool contains(FieldElement const& x) const;

  // The same lattice presented by a basis that is lower triangular with
  // respect to the power basis, so an order is presented as {1, ...}.
  FieldLattice triangular() const;

  friend bool operator==(FieldLattice const& a, FieldLattice const& b) {
    return a.denominator_ == b.denominator_ && a.hnf_ == b.hnf_;
  }

 private:
  std::vector<FieldElement> basis_;
  IntMatrix hnf_;
  Integer denominator_;
};

// Rational matrix M with x * a_i = sum_j M_ij a_j.
RatMatrix multiplication_matrix(FieldElement const& x, std::span<FieldElement const> basis);

bool lattice_contains(FieldLattice const& lattice, FieldElement const& x);

FieldLattice lattice_sum(FieldLattice const& a, FieldLattice const& b);
FieldLattice lattice_intersection(FieldLattice const& a, FieldLattice const& b);
// x * L for a nonzero field element x.
FieldLattice scale(FieldLattice const& lattice, FieldElement const& x);

// {x in F : x L subset of L}, presented triangularly.
FieldLattice coefficient_order(FieldLattice const& lattice);

// Contains 1 and is closed under multiplication.
bool is_order(FieldLattice const& lattice);

}  // namespace qpflow
