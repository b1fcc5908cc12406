#include "qpflow/real_roots.hpp"

#include <algorithm>

#include "qpflow/errors.hpp"

namespace qpflow {

Interval operator+(Interval const& a, Interval const& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator+(Interval const& a, Rational const& b) {
  return {a.lo + b, a.hi + b};
}

Interval operator*(Interval const& a, Interval const& b) {
  Rational const p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator*(Interval const& a, Rational const& b) {
  Rational const x = a.lo * b;
  Rational const y = a.hi * b;
  return x <= y ? Interval{x, y} : Interval{y, x};
}

Interval evaluate(RatPoly const& p, Interval const& x) {
  Interval acc{0, 0};
  auto const& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

int sign_at(IntPoly const& p, Rational const& x) {
  return sgn(p.evaluate(x));
}

namespace {

// Sturm chain of a squarefree polynomial, each member scaled to a primitive
// integer polynomial by a positive factor so that signs are preserved.
std::vector<IntPoly> sturm_chain(IntPoly const& p) {
  std::vector<IntPoly> chain{p, primitive_part(p.derivative())};
  if (chain[1].is_zero()) {
    chain.pop_back();
    return chain;
  }
  // primitive_part forces a positive leading coefficient; undo if p' had a
  // negative one.
  if (p.derivative().leading() < 0) chain[1] = -chain[1];
  while (true) {
    IntPoly const& a = chain[chain.size() - 2];
    IntPoly const& b = chain.back();
    RatPoly const r = divrem(to_rational(a), to_rational(b)).second;
    if (r.is_zero()) break;
    IntPoly next = primitive_part(r);
    // primitive_part normalizes the sign; Sturm needs -rem.
    if (r.leading() > 0) next = -next;
    chain.push_back(std::move(next));
  }
  return chain;
}

int variations(std::vector<int> const& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(std::vector<IntPoly> const& chain, Rational const& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (auto const& q : chain) s.push_back(sign_at(q, x));
  return variations(s);
}

int variations_at_infinity(std::vector<IntPoly> const& chain, bool positive) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (auto const& q : chain) {
    int sign = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) sign = -sign;
    s.push_back(sign);
  }
  return variations(s);
}

IntPoly squarefree_integer(IntPoly const& p) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial has no isolated roots");
  return primitive_part(squarefree_part(to_rational(p)));
}

// Strict bound on the absolute value of every root (Cauchy).
Integer root_bound(IntPoly const& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational const r = make_rational(abs(p.coefficient(i)), abs(p.leading()));
    if (r > m) m = r;
  }
  return ceil(m) + 1;
}

// A split point strictly inside (lo, hi) that is not a root of p.
Rational split_point(IntPoly const& p, Rational const& lo, Rational const& hi) {
  Rational mid = (lo + hi) / 2;
  Rational step = (hi - lo) / 4;
  while (sign_at(p, mid) == 0) {
    mid = (lo + hi) / 2 + step;
    step /= 2;
  }
  return mid;
}

void isolate(IntPoly const& p, std::vector<IntPoly> const& chain, Rational const& lo,
             int v_lo, Rational const& hi, int v_hi, std::vector<Interval>& out) {
  int const count = v_lo - v_hi;
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational const mid = split_point(p, lo, hi);
  int const v_mid = variations_at(chain, mid);
  isolate(p, chain, lo, v_lo, mid, v_mid, out);
  isolate(p, chain, mid, v_mid, hi, v_hi, out);
}

}  // namespace

int count_real_roots(IntPoly const& p) {
  IntPoly const q = squarefree_integer(p);
  if (q.degree() < 1) return 0;
  auto const chain = sturm_chain(q);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<Interval> isolate_real_roots(IntPoly const& p) {
  IntPoly const q = squarefree_integer(p);
  std::vector<Interval> out;
  if (q.degree() < 1) return out;
  auto const chain = sturm_chain(q);
  Rational const bound(root_bound(q));
  isolate(q, chain, -bound, variations_at(chain, -bound), bound,
          variations_at(chain, bound), out);
  return out;
}

Interval refine_root(IntPoly const& poly, Interval interval, Rational const& max_width) {
  // Bisection needs a sign change, so repeated roots are removed first.
  IntPoly const p = primitive_part(squarefree_part(to_rational(poly)));
  int const s_lo = sign_at(p, interval.lo);
  if (s_lo == 0) return {interval.lo, interval.lo};
  if (sign_at(p, interval.hi) == 0) return {interval.hi, interval.hi};
  while (interval.width() > max_width) {
    Rational const mid = interval.midpoint();
    int const s = sign_at(p, mid);
    if (s == 0) return {mid, mid};
    if (s == s_lo) {
      interval.lo = mid;
    } else {
      interval.hi = mid;
    }
  }
  return interval;
}

}  // namespace qpflow
