#pragma once

#include <vector>

#include "qpflow/hnf.hpp"

namespace qpflow {

// LLL reduction with delta = 3/4 of a basis of linearly independent integer
// row vectors.  Gram-Schmidt data is kept exactly in the integral form of
// Cohen's "integral LLL", so no floating point is involved.  Throws
// InvalidArgument if the rows are dependent.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis);

}  // namespace qpflow
