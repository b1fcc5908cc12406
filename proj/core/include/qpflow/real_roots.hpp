#pragma once

#include <vector>

#include "qpflow/polynomial.hpp"

namespace qpflow {

// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(Rational const& x) const { return lo <= x && x <= hi; }

  friend bool operator==(Interval const&, Interval const&) = default;
};

Interval operator+(Interval const& a, Interval const& b);
Interval operator+(Interval const& a, Rational const& b);
Interval operator*(Interval const& a, Interval const& b);
Interval operator*(Interval const& a, Rational const& b);

// Interval enclosure of p over x (Horner form).
Interval evaluate(RatPoly const& p, Interval const& x);

// Sign of p at a rational point: -1, 0 or +1.
int sign_at(IntPoly const& p, Rational const& x);

// Number of distinct real roots of p, counted with Sturm's theorem.
int count_real_roots(IntPoly const& p);

// Isolating intervals for the distinct real roots of p, ascending.  Each
// interval holds exactly one root in its interior and no root at either
// endpoint.  The squarefree part of p is used, so p need not be squarefree.
std::vector<Interval> isolate_real_roots(IntPoly const& p);

// Bisects an isolating interval of a simple root of p until its width is at
// most max_width.  If a bisection point hits the root exactly the interval
// collapses to that point.
Interval refine_root(IntPoly const& p, Interval interval, Rational const& max_width);

}  // namespace qpflow
