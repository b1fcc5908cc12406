#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qpflow/polynomial.hpp"

namespace qpflow {

struct ProbeDefaults {
  static constexpr int max_degree = 8;
  static constexpr int precision_digits = 100;
  static Integer height_bound() { return pow10(12); }
};

enum class ProbeKind { relation_found, no_relation };

// Outcome of a numeric relation search.  A no_relation verdict is evidence
// bounded by (degree_bound, height_bound, precision_digits), never a proof.
struct ProbeVerdict {
  ProbeKind kind = ProbeKind::no_relation;
  // Primitive, positive leading coefficient; present iff relation_found.
  std::optional<IntPoly> witness;
  int degree_bound = 0;
  Integer height_bound;
  // Working precision actually used (the input may carry fewer digits than
  // requested).
  int precision_digits = 0;
  // |witness(x)| at the input decimal, when a relation was found.
  Rational residual;
  // A degree-1 witness: x is rational, so a flow (1, x) is not quasiperiodic.
  bool degenerate_rational = false;
};

std::string to_string(ProbeKind kind);
// One-line summary including the bounds, e.g. for reports.
std::string describe(ProbeVerdict const& verdict);

// Smallest-degree, then smallest-height, integer polynomial p with
// |p(x)| < 10^-(precision/2) and height(p) <= height_bound, searched by LLL on
// the lattice [I | N (1, x, ..., x^d)] with N = 10^precision.  Candidates with
// |p(x)| (height(p) + 1)^deg(p) >= 10^-(precision/4) are discarded: every real
// number has relations that small.
ProbeVerdict minpoly_from_decimal(std::string_view x, int max_degree, Integer const& height_bound,
                                  int precision_digits);

// For the flow (1, x) on T^2 a symmetry (B, alpha) forces
// b12 x^2 + (b11 - b22) x - b21 = 0, so the multiplier group is {+-1} unless
// x satisfies an integer polynomial of degree <= 2.
ProbeVerdict t2_symmetry_probe(std::string_view x, int precision_digits, Integer const& height_bound);

// Scientific rendering of a nonnegative rational, e.g. "3.1e-45".
std::string to_scientific(Rational const& q);

}  // namespace qpflow
