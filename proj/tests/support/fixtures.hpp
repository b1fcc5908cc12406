#pragma once

#include <random>
#include <vector>

#include "qpflow/flow.hpp"
#include "qpflow/number_field.hpp"

namespace qpflow::testing {

inline NumberField sqrt_field(long d) { return make_field(IntPoly{-d, 0, 1}, 1); }

// Q(g), g = sqrt2 + sqrt3, and the square roots inside it.
struct Biquadratic {
  NumberField f = make_field(IntPoly{1, 0, -10, 0, 1}, 3);
  FieldElement g = f.generator();
  FieldElement s2 = Rational(1, 2) * (g * g * g - Rational(9) * g);
  FieldElement s3 = Rational(1, 2) * (Rational(11) * g - g * g * g);
  FieldElement s6 = Rational(1, 2) * (g * g - Rational(5) * f.one());
};

// The real root of z^3 - z^2 - 1 (reciprocal of the real root of z^3 + z - 1).
inline NumberField cubic_field() { return make_field(IntPoly{-1, 0, -1, 1}, 0); }
inline NumberField cubic_field_reciprocal() { return make_field(IntPoly{-1, 1, 0, 1}, 0); }
inline NumberField cube_root_two() { return make_field(IntPoly{-2, 0, 0, 1}, 0); }

inline FieldElement omega(NumberField const& f, long d) {
  FieldElement s = f.generator();
  return d % 4 == 1 ? Rational(1, 2) * (f.one() + s) : s;
}

inline std::vector<long> small_squarefree() { return {2, 3, 5, 6, 7, 10, 11, 13}; }

inline FieldElement random_element(NumberField const& f, std::mt19937_64& rng, int bound = 9,
                                   int max_den = 3) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, max_den);
  std::vector<Rational> c;
  for (int k = 0; k < f.degree(); ++k) c.push_back(make_rational(num(rng), den(rng)));
  return f.element(std::move(c));
}

inline FieldElement random_nonzero(NumberField const& f, std::mt19937_64& rng) {
  while (true) {
    FieldElement x = random_element(f, rng);
    if (!x.is_zero()) return x;
  }
}

}  // namespace qpflow::testing
