#include <gtest/gtest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "qpflow/orders.hpp"

using namespace qpflow;
using namespace qpflow::testing;

TEST(Orders, SquarefreeAndQuadraticBasis) {
  EXPECT_TRUE(is_squarefree(2));
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_FALSE(is_squarefree(9));
  auto b5 = quadratic_integral_basis(5);
  EXPECT_EQ(to_string(b5[1]), "1/2 + 1/2*g");
  auto b3 = quadratic_integral_basis(3);
  EXPECT_EQ(to_string(b3[1]), "g");
  EXPECT_THROW(quadratic_field(4), Error);
}

TEST(Orders, FundamentalUnitMatchesBruteForcePell) {
  for (long d = 2; d <= 20; ++d) {
    if (!is_squarefree(d)) continue;
    QuadraticUnitGroup u = fundamental_unit(d);
    FieldElement expected = pell_fundamental_unit(u.field, d);
    EXPECT_EQ(u.fundamental_unit, expected) << "d = " << d;
    EXPECT_TRUE(is_unit(u.fundamental_unit));
    EXPECT_EQ(sign(u.fundamental_unit - u.field.one()), 1);
  }
  EXPECT_EQ(to_string(fundamental_unit(2).fundamental_unit), "1 + g");
  EXPECT_EQ(to_string(fundamental_unit(5).fundamental_unit), "1/2 + 1/2*g");
  EXPECT_EQ(to_string(fundamental_unit(19).fundamental_unit), "170 + 39*g");
}

TEST(Orders, LargerDiscriminantsStayExact) {
  // Long continued-fraction periods with large units.
  QuadraticUnitGroup u = fundamental_unit(94);
  EXPECT_EQ(to_string(u.fundamental_unit), "2143295 + 221064*g");
  QuadraticUnitGroup v = fundamental_unit(61);
  EXPECT_EQ(to_string(v.fundamental_unit), "39/2 + 5/2*g");
}

TEST(Orders, QuadraticPresentationOfOtherGenerators) {
  NumberField golden = make_field(IntPoly{-1, -1, 1}, 1);
  QuadraticPresentation p = quadratic_presentation(golden);
  EXPECT_EQ(p.d, 5);
  EXPECT_EQ(p.sqrt_d, Rational(2) * golden.generator() - golden.one());
  NumberField f = make_field(IntPoly{-12, 0, 1}, 0);  // g = -2 sqrt3
  QuadraticPresentation q = quadratic_presentation(f);
  EXPECT_EQ(q.d, 3);
  EXPECT_EQ(q.sqrt_d, Rational(-1, 2) * f.generator());
  EXPECT_EQ(to_string(fundamental_unit_of(f)), "2 - 1/2*g");
  Biquadratic b;
  EXPECT_THROW(quadratic_presentation(b.f), Error);
}

TEST(Orders, UnitIndexOfSuborders) {
  NumberField f = sqrt_field(5);
  FieldElement s = f.generator();
  UnitIndex z5 = order_unit_index(FieldLattice({f.one(), s}));
  EXPECT_EQ(z5.index, 3);
  EXPECT_EQ(z5.generator, f.from_rational(2) + s);
  UnitIndex z25 = order_unit_index(FieldLattice({f.one(), Rational(2) * s}));
  EXPECT_EQ(z25.index, 6);
  EXPECT_EQ(z25.generator, f.from_rational(9) + Rational(4) * s);
  UnitIndex maximal = order_unit_index(FieldLattice(quadratic_integral_basis(5)));
  EXPECT_EQ(maximal.index, 1);
  // Oracle: the index is the least k with eps^k in the order.
  FieldElement eps = fundamental_unit(5).fundamental_unit;
  for (long c = 1; c <= 6; ++c) {
    FieldLattice order({f.one(), Rational(c) * s});
    UnitIndex ui = order_unit_index(order);
    long k = 1;
    while (!order.contains(pow(eps, k))) ++k;
    EXPECT_EQ(ui.index, k) << "conductor " << c;
    EXPECT_EQ(ui.generator, pow(eps, k));
  }
  EXPECT_THROW(order_unit_index(FieldLattice({Rational(2) * f.one(), s})), Error);
}

TEST(Orders, LatticeOperations) {
  Biquadratic q;
  FieldLattice z({q.f.one(), q.s2, q.s3, q.s6});
  FieldLattice half({q.f.one(), q.s3, q.s6, Rational(1, 2) * (q.s2 + q.s6)});
  EXPECT_TRUE(is_order(z));
  EXPECT_TRUE(is_order(half));
  EXPECT_EQ(lattice_sum(z, half), half);
  EXPECT_EQ(lattice_intersection(z, half), z);
  EXPECT_EQ(coefficient_order(z), z);
  EXPECT_EQ(coefficient_order(half), half);
  FieldLattice twice = scale(z, q.f.from_rational(2));
  EXPECT_FALSE(is_order(twice));
  EXPECT_EQ(coefficient_order(twice), z);
  EXPECT_TRUE(half.contains(Rational(1, 2) * (q.s2 + q.s6)));
  EXPECT_FALSE(z.contains(Rational(1, 2) * (q.s2 + q.s6)));
  // The triangular presentation of an order starts with 1.
  EXPECT_EQ(coefficient_order(z).basis().front(), q.f.one());
  // Same lattice from a different basis compares equal.
  FieldLattice other({q.f.one() + q.s2, q.s2, q.s3 - Rational(3) * q.s6, q.s6});
  EXPECT_EQ(other, z);
}

TEST(Orders, LatticeAlgebraOnRandomLattices) {
  std::mt19937_64 rng(31);
  NumberField f = cubic_field();
  for (int t = 0; t < 30; ++t) {
    auto independent = [&] {
      while (true) {
        std::vector<FieldElement> v;
        RatMatrix m(3, 3);
        for (std::size_t k = 0; k < 3; ++k) {
          v.push_back(random_element(f, rng, 4, 2));
          for (std::size_t j = 0; j < 3; ++j) m(k, j) = v[k].coord(j);
        }
        if (det(m) != 0) return v;
      }
    };
    std::vector<FieldElement> a = independent(), b = independent();
    FieldLattice la(a), lb(b);
    FieldLattice s = lattice_sum(la, lb);
    FieldLattice i = lattice_intersection(la, lb);
    for (auto const& x : a) EXPECT_TRUE(s.contains(x));
    for (auto const& x : i.basis()) {
      EXPECT_TRUE(la.contains(x));
      EXPECT_TRUE(lb.contains(x));
    }
    FieldLattice o = coefficient_order(la);
    EXPECT_TRUE(is_order(o));
    for (auto const& x : o.basis()) {
      for (auto const& y : a) EXPECT_TRUE(la.contains(x * y));
    }
  }
}

TEST(Orders, VerifyIntegralBasis) {
  Biquadratic q;
  std::vector<FieldElement> good{q.f.one(), q.s3, q.s6, Rational(1, 2) * (q.s2 + q.s6)};
  EXPECT_EQ(verify_integral_basis(q.f, good).kind, BasisVerdictKind::verified_maximal);
  std::vector<FieldElement> sub{q.f.one(), q.s2, q.s3, q.s6};
  EXPECT_EQ(verify_integral_basis(q.f, sub).kind, BasisVerdictKind::verified_order_only);
  std::vector<FieldElement> frac{q.f.one(), q.s3, q.s6, Rational(1, 2) * q.s2};
  EXPECT_EQ(verify_integral_basis(q.f, frac).kind, BasisVerdictKind::rejected);
  std::vector<FieldElement> dep{q.f.one(), q.s3, q.s6, q.s3 + q.s6};
  EXPECT_EQ(verify_integral_basis(q.f, dep).kind, BasisVerdictKind::rejected);
  std::vector<FieldElement> no_one{q.s2, q.s3, q.s6, q.f.one() + q.s2};
  // Spans the same lattice as sub, so it is an order presented without 1.
  EXPECT_NE(verify_integral_basis(q.f, no_one).kind, BasisVerdictKind::verified_maximal);

  NumberField f5 = sqrt_field(5);
  EXPECT_EQ(verify_integral_basis(f5, quadratic_maximal_order(f5).basis()).kind,
            BasisVerdictKind::verified_maximal);
  std::vector<FieldElement> z5{f5.one(), f5.generator()};
  EXPECT_EQ(verify_integral_basis(f5, z5).kind, BasisVerdictKind::verified_order_only);

  NumberField c = cubic_field();
  std::vector<FieldElement> power{c.one(), c.generator(), pow(c.generator(), 2)};
  EXPECT_EQ(verify_integral_basis(c, power).kind, BasisVerdictKind::verified_maximal);
  NumberField r = cube_root_two();
  std::vector<FieldElement> rp{r.one(), r.generator(), pow(r.generator(), 2)};
  // Z[2^(1/3)] is maximal, but no certificate is available here.
  EXPECT_EQ(verify_integral_basis(r, rp).kind, BasisVerdictKind::verified_order_only);
}
