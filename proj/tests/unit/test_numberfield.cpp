#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../support/fixtures.hpp"
#include "qpflow/field_lattice.hpp"

using namespace qpflow;
using namespace qpflow::testing;

namespace {

std::vector<NumberField> sample_fields() {
  return {sqrt_field(5), cubic_field(), Biquadratic{}.f, cube_root_two()};
}

// Independent double-precision value of an element: bisection on the
// minimal polynomial inside the isolating interval.
double approx_value(FieldElement const& x) {
  NumberField const& f = x.field();
  RatPoly p = to_rational(f.min_poly());
  auto at = [&](double z) {
    double v = 0;
    for (int k = p.degree(); k >= 0; --k) v = v * z + p.coefficient(k).get_d();
    return v;
  };
  double lo = f.root_interval().lo.get_d(), hi = f.root_interval().hi.get_d();
  if (at(lo) == 0) hi = lo;
  if (at(hi) == 0) lo = hi;
  for (int i = 0; i < 200 && lo < hi; ++i) {
    double mid = 0.5 * (lo + hi);
    if ((at(mid) > 0) == (at(lo) > 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double g = 0.5 * (lo + hi);
  double s = 0;
  for (int k = f.degree() - 1; k >= 0; --k) s = s * g + x.coord(k).get_d();
  return s;
}

std::vector<FieldElement> random_basis(NumberField const& f, std::mt19937_64& rng) {
  while (true) {
    std::vector<FieldElement> b;
    for (int k = 0; k < f.degree(); ++k) b.push_back(random_element(f, rng, 5, 2));
    std::vector<std::vector<Rational>> rows;
    for (auto const& x : b) rows.emplace_back(x.coords().begin(), x.coords().end());
    if (det(RatMatrix::from_rows(rows)) != 0) return b;
  }
}

}  // namespace

TEST(NumberField, ConstructionChecksInvariants) {
  EXPECT_THROW(make_field(IntPoly{-4, 0, 1}, 0), Error);        // reducible
  EXPECT_THROW(make_field(IntPoly{-5, 0, 2}, 0), Error);        // not monic
  EXPECT_THROW(make_field(IntPoly{-2, 0, 0, 0, 0, 0, 0, 1}, 0), Error);  // degree 7
  EXPECT_THROW(make_field(IntPoly{-5, 0, 1}, 2), Error);        // only two real roots
  EXPECT_THROW(make_field(IntPoly{2, 0, 1}, 0), Error);         // no real root
  NumberField a = make_field(IntPoly{-5, 0, 1}, 0);
  NumberField b = make_field(IntPoly{-5, 0, 1}, 1);
  EXPECT_FALSE(a == b);
  EXPECT_LT(to_double(a.generator()), 0);
  EXPECT_THROW(a.generator() + b.generator(), FieldMismatch);
}

TEST(NumberField, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(21);
  for (auto const& f : sample_fields()) {
    for (int t = 0; t < 60; ++t) {
      FieldElement x = random_element(f, rng), y = random_element(f, rng),
                   z = random_element(f, rng);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x - x, f.zero());
      if (!x.is_zero()) {
        EXPECT_EQ(x * inverse(x), f.one());
        EXPECT_EQ((y / x) * x, y);
      }
    }
  }
}

TEST(NumberField, NormAndTraceAreMultiplicativeAndAdditive) {
  std::mt19937_64 rng(22);
  for (auto const& f : sample_fields()) {
    for (int t = 0; t < 40; ++t) {
      FieldElement x = random_element(f, rng), y = random_element(f, rng);
      EXPECT_EQ(norm(x * y), norm(x) * norm(y));
      EXPECT_EQ(trace(x + y), trace(x) + trace(y));
    }
  }
}

TEST(NumberField, NormIndependentOfBasis) {
  std::mt19937_64 rng(23);
  for (auto const& f : sample_fields()) {
    for (int b = 0; b < 20; ++b) {
      auto basis = random_basis(f, rng);
      FieldElement x = random_element(f, rng);
      RatMatrix m = multiplication_matrix(x, basis);
      EXPECT_EQ(det(m), norm(x));
      EXPECT_EQ(characteristic_polynomial(m), characteristic_polynomial(x));
    }
  }
}

TEST(NumberField, MinimalPolynomials) {
  Biquadratic q;
  EXPECT_EQ(to_string(minimal_polynomial(Rational(1, 2) * (q.s2 + q.s6))), "z^4 - 4*z^2 + 1");
  EXPECT_EQ(to_string(minimal_polynomial(q.s2)), "z^2 - 2");
  EXPECT_EQ(to_string(minimal_polynomial(q.s6)), "z^2 - 6");
  FieldElement alpha = Rational(2) * q.s6 + Rational(4) * q.s3 + Rational(5) * q.s2 +
                       Rational(5) * q.f.one();
  EXPECT_EQ(to_string(minimal_polynomial(alpha)), "z^4 - 20*z^3 - 94*z^2 + 20*z + 1");
  EXPECT_EQ(to_string(minimal_polynomial(q.f.from_rational(Rational(3, 2)))), "z - 3/2");
  EXPECT_TRUE(is_unit(alpha));
  EXPECT_TRUE(is_algebraic_integer(Rational(1, 2) * (q.s2 + q.s6)));
  EXPECT_FALSE(is_algebraic_integer(Rational(1, 2) * q.s2));
  NumberField f5 = sqrt_field(5);
  FieldElement phi = Rational(1, 2) * (f5.one() + f5.generator());
  EXPECT_EQ(to_string(minimal_polynomial(phi)), "z^2 - z - 1");
  EXPECT_EQ(pow(phi, 3), f5.from_rational(2) + f5.generator());
  EXPECT_EQ(pow(phi, -1), phi - f5.one());
  EXPECT_FALSE(is_unit(f5.from_rational(2)));
}

TEST(NumberField, SignAndOrderMatchIndependentEvaluation) {
  std::mt19937_64 rng(24);
  for (auto const& f : sample_fields()) {
    for (int t = 0; t < 100; ++t) {
      FieldElement x = random_element(f, rng);
      double v = approx_value(x);
      if (std::abs(v) > 1e-9) EXPECT_EQ(sign(x), v > 0 ? 1 : -1);
      EXPECT_NEAR(to_double(x), v, 1e-9 * (1 + std::abs(v)));
      Rational a = approximate(x, 40);
      EXPECT_NEAR(a.get_d(), v, 1e-9 * (1 + std::abs(v)));
    }
  }
  // Elements very close to zero: g - p/q for good rational approximations.
  NumberField f = sqrt_field(2);
  FieldElement close = f.generator() - f.from_rational(Rational(665857, 470832));
  // 665857^2 - 2 * 470832^2 = 1, so the fraction lies just above sqrt2.
  EXPECT_EQ(sign(close), -1);
  EXPECT_EQ(compare(f.from_rational(Rational(665857, 470832)), f.generator()), 1);
  EXPECT_EQ(sign(f.zero()), 0);
}

TEST(NumberField, DecimalRendering) {
  NumberField f = sqrt_field(2);
  EXPECT_EQ(to_decimal(f.generator(), 30), "1.414213562373095048801688724210");
  EXPECT_EQ(to_decimal(-f.generator(), 5), "-1.41421");
  EXPECT_EQ(to_string(Rational(1, 2) * (f.one() + f.generator())), "1/2 + 1/2*g");
  EXPECT_EQ(to_string(f.zero()), "0");
}

TEST(NumberField, PowerBasisDiscriminants) {
  auto disc = [](NumberField const& f) {
    std::vector<FieldElement> b;
    for (int k = 0; k < f.degree(); ++k) b.push_back(pow(f.generator(), k));
    return discriminant(b);
  };
  EXPECT_EQ(disc(sqrt_field(5)), 20);
  EXPECT_EQ(disc(sqrt_field(2)), 8);
  EXPECT_EQ(disc(cubic_field()), -31);
  EXPECT_EQ(disc(cubic_field_reciprocal()), -31);
  EXPECT_EQ(disc(Biquadratic{}.f), 147456);
  EXPECT_EQ(disc(cube_root_two()), -108);
}
