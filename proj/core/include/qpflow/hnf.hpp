#pragma once

#include <vector>

#include "qpflow/matrix.hpp"

namespace qpflow {

using IntVector = std::vector<Integer>;

// Row-style Hermite normal form of the lattice spanned by `rows`: a staircase
// whose pivots are positive, with every entry above a pivot reduced into
// [0, pivot).  Zero rows are dropped, so the result has rank(rows) rows.
IntMatrix hnf(std::vector<IntVector> const& rows);
IntMatrix hnf(IntMatrix const& m);

// Membership of an integer vector in the row lattice of a matrix that is
// already in Hermite normal form.
bool hnf_contains(IntMatrix const& h, IntVector v);

}  // namespace qpflow
