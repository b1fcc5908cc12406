#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpflow/flow.hpp"
#include "qpflow/orders.hpp"
#include "qpflow/probe.hpp"
#include "qpflow/unimodular.hpp"

namespace qpflow {

// A generalized symmetry R of a flow, represented by its tangent matrix B,
// together with its multiplier: alpha a_i = sum_j b_ij a_j for every i.
struct SymmetrySolution {
  UnimodularMatrix matrix;
  FieldElement multiplier;
};

enum class ExclusionReason { non_integer_entry, not_unimodular, inconsistent, not_in_span };

std::string to_string(ExclusionReason reason);

// Why a candidate multiplier or matrix is not a symmetry.
struct Excluded {
  ExclusionReason reason;
  std::string detail;
};

template <typename T>
using Outcome = std::variant<T, Excluded>;

// The unique B with alpha a_i = sum_j b_ij a_j, when it is unimodular.
Outcome<UnimodularMatrix> multiplier_matrix(Flow const& flow, FieldElement const& alpha);

// alpha = (sum_j b_1j a_j) / a_1, when all n equations hold and det B = +-1.
Outcome<FieldElement> multiplier_of_matrix(Flow const& flow, IntMatrix const& b);

// Largest work allowed for the brute-force oracle, (2 bound + 1)^(n^2).
inline constexpr double kEnumerationGuard = 1e8;

// Every solution (B, alpha) with entries of B in [-bound, bound], sorted by
// the real value of alpha.  B is determined by alpha, which is determined by
// the first row of B, so the search runs over first rows and checks the
// remaining equations exactly.
std::vector<SymmetrySolution> enumerate_multipliers_bounded(Flow const& flow, long bound);

// The unique rational B with B a = omega (the components of flow2), when it
// is unimodular; the flows are then smoothly conjugate.
Outcome<UnimodularMatrix> conjugacy_matrix(Flow const& flow1, Flow const& flow2);

enum class ReportKind { quadratic_full, membership_only, trivial_numeric };

std::string to_string(ReportKind kind);

// Description of the multiplier group of a flow.
struct MultiplierReport {
  ReportKind kind = ReportKind::membership_only;
  // quadratic_full: the group is {+-generator^m}, of `index` in the units of
  // the maximal order.
  std::optional<FieldElement> generator;
  std::optional<long> index;
  std::optional<QuadraticUnitGroup> ambient_unit_group;
  // Coefficient order of the Z-span of the components; the multiplier group
  // is its unit group.
  std::optional<FieldLattice> order;
  // Verified members (always including +-1), sorted by value.
  std::vector<SymmetrySolution> verified_members;
  std::vector<std::pair<FieldElement, Excluded>> excluded_candidates;
  // trivial_numeric: the probe evidence behind "only +-1"; verified_members
  // is empty because numeric flows carry no field.
  std::vector<ProbeVerdict> evidence;
  std::string detail;
};

// Multiplier group of an F-algebraic flow.  Quadratic fields get a complete
// description; higher degrees a verified membership list seeded with +-1 and
// the given candidates.  Numeric flows get probe evidence only.  Throws
// InvalidArgument when an exact flow has fewer components than the field
// degree; classify_flow finds the field such a flow belongs to.
MultiplierReport multiplier_group(Flow const& flow,
                                  std::vector<FieldElement> const& candidates = {});

// Flow whose components are a verified integral basis of the field; its
// multiplier group is the full unit group of the ring of integers.
Flow integral_basis_flow(NumberField const& field, std::vector<FieldElement> basis);

}  // namespace qpflow
