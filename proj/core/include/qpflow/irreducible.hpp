#pragma once

#include <optional>
#include <utility>

#include "qpflow/polynomial.hpp"

namespace qpflow {

inline constexpr int kMaxIrreducibilityDegree = 8;

// A nontrivial factorization p = f * g over the integers with
// 1 <= deg f <= deg p / 2, or nullopt when none exists.  The search is
// exhaustive over factors whose coefficients obey the Landau-Mignotte bound.
// Requires p nonconstant and of degree at most kMaxIrreducibilityDegree.
std::optional<std::pair<IntPoly, IntPoly>> find_factor(IntPoly const& p);

// True iff the primitive nonconstant polynomial p has no nonconstant proper
// factor over the integers.
bool poly_irreducible(IntPoly const& p);

}  // namespace qpflow
