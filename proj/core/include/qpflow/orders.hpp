#pragma once

#include <span>
#include <string>
#include <vector>

#include "qpflow/field_lattice.hpp"

namespace qpflow {

bool is_squarefree(long d);

// Q(sqrt d) presented by z^2 - d and its positive root.
NumberField quadratic_field(long d);

// {1, sqrt d} for d = 2, 3 mod 4 and {1, (1 + sqrt d)/2} for d = 1 mod 4, in
// quadratic_field(d).
std::vector<FieldElement> quadratic_integral_basis(long d);

// Units of the maximal order of a real quadratic field: {+-eps^m}.
struct QuadraticUnitGroup {
  NumberField field;
  FieldElement fundamental_unit;  // eps > 1
};

// Fundamental unit of Q(sqrt d) read off the periodic continued fraction of
// sqrt d or (1 + sqrt d)/2, computed on exact quadratic surds.
QuadraticUnitGroup fundamental_unit(long d);

// Any real quadratic field is Q(sqrt d) for one squarefree d >= 2; sqrt_d is
// the positive square root as an element of that field.
struct QuadraticPresentation {
  long d;
  FieldElement sqrt_d;
};
QuadraticPresentation quadratic_presentation(NumberField const& field);

// The maximal order of a real quadratic field, presented as {1, omega}.
FieldLattice quadratic_maximal_order(NumberField const& field);

// The fundamental unit of the maximal order, as an element of `field`.
FieldElement fundamental_unit_of(NumberField const& field);

struct UnitIndex {
  FieldElement generator;  // eps^index, the generator > 1 of the order's units
  long index;
};

// Smallest k >= 1 with eps^k in the order, for an order in a real quadratic
// field.
UnitIndex order_unit_index(FieldLattice const& order);

enum class BasisVerdictKind { verified_maximal, verified_order_only, rejected };

struct BasisVerdict {
  BasisVerdictKind kind;
  std::string reason;
};

std::string to_string(BasisVerdictKind kind);

// Checks a candidate integral basis: integrality, independence and closure
// under multiplication, then maximality where a certificate is available
// (quadratic fields, the built-in table, or a squarefree discriminant).
BasisVerdict verify_integral_basis(NumberField const& field,
                                   std::span<FieldElement const> candidate);

}  // namespace qpflow
