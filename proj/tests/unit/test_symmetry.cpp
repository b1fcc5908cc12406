#include <gtest/gtest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "qpflow/classify.hpp"
#include "qpflow/symmetry.hpp"

using namespace qpflow;
using namespace qpflow::testing;

namespace {

IntMatrix matrix_of(Outcome<UnimodularMatrix> const& o) {
  auto const* u = std::get_if<UnimodularMatrix>(&o);
  if (!u) throw std::runtime_error("excluded: " + std::get<Excluded>(o).detail);
  return u->matrix();
}

FieldElement value_of(Outcome<FieldElement> const& o) {
  auto const* x = std::get_if<FieldElement>(&o);
  if (!x) throw std::runtime_error("excluded: " + std::get<Excluded>(o).detail);
  return *x;
}

std::vector<FieldElement> multipliers(std::vector<SymmetrySolution> const& s) {
  std::vector<FieldElement> out;
  for (auto const& x : s) out.push_back(x.multiplier);
  return out;
}

bool contains(std::vector<FieldElement> const& xs, FieldElement const& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

std::vector<Flow> quadratic_flows() {
  std::vector<Flow> out;
  for (long d : small_squarefree()) {
    NumberField f = sqrt_field(d);
    out.push_back(make_flow(f, {f.one(), f.generator()}));
    if (d % 4 == 1) out.push_back(make_flow(f, {f.one(), omega(f, d)}));
  }
  return out;
}

}  // namespace

TEST(Flow, Construction) {
  NumberField f2 = sqrt_field(2);
  EXPECT_THROW(make_flow(f2, {f2.one(), f2.from_rational(Rational(3, 2))}), Error);
  EXPECT_THROW(make_flow(f2, {f2.one()}), Error);
  NumberField f5 = sqrt_field(5);
  EXPECT_THROW(make_flow(f2, {f2.one(), f5.generator()}), Error);
  Flow x = make_flow(f5, {f5.one(), f5.generator()}, "sqrt2");
  EXPECT_EQ(x.dimension(), 2u);
  EXPECT_EQ(*x.scale_label(), "sqrt2");
  NumberField c = cubic_field_reciprocal();
  FieldElement b = c.generator();
  EXPECT_EQ(make_flow(c, {b * b, b, c.one()}).dimension(), 3u);
  EXPECT_THROW(make_numeric_flow({"0", "1.5"}), Error);
  EXPECT_THROW(make_numeric_flow({"1"}), Error);
}

TEST(Flow, AdvanceIsTheLinearFlowModOne) {
  NumberField f = sqrt_field(2);
  Flow x = make_flow(f, {f.one(), f.generator()});
  std::vector<Rational> origin{0, 0};
  auto p = advance(x, Rational(0), origin, 20);
  EXPECT_EQ(p, origin);
  auto q = advance(x, Rational(1), origin, 12);
  EXPECT_EQ(q[0], 0);
  EXPECT_LT(abs(q[1] - Rational(41421356237, 100000000000)), Rational(1, 10000000000));
  std::vector<Rational> start{Rational(1, 3), Rational(9, 10)};
  int digits = 25;
  auto once = advance(x, Rational(1), start, digits);
  auto twice = advance(x, Rational(1), once, digits);
  auto direct = advance(x, Rational(2), start, digits);
  Rational ulp = 1 / Rational(pow10(digits));
  for (std::size_t i = 0; i < 2; ++i) {
    Rational diff = abs(twice[i] - direct[i]);
    diff = std::min(diff, Rational(1 - diff));
    EXPECT_LE(diff, 2 * ulp);
  }
  EXPECT_THROW(advance(x, Rational(1), origin, 0), Error);
  Flow num = make_numeric_flow({"1", "3.14159265358979323846"});
  auto r = advance(num, Rational(2), origin, 10);
  EXPECT_EQ(to_decimal(r[1], 10), "0.2831853072");
}

TEST(Symmetry, MultiplierMatrixExamples) {
  NumberField f5 = sqrt_field(5);
  FieldElement s5 = f5.generator();
  Flow e1 = make_flow(f5, {f5.one(), s5}, "sqrt2");
  EXPECT_EQ(matrix_of(multiplier_matrix(e1, f5.from_rational(2) + s5)), (IntMatrix{{2, 1}, {5, 2}}));
  auto phi = multiplier_matrix(e1, Rational(1, 2) * (f5.one() + s5));
  ASSERT_TRUE(std::holds_alternative<Excluded>(phi));
  EXPECT_EQ(std::get<Excluded>(phi).reason, ExclusionReason::non_integer_entry);
  EXPECT_NE(std::get<Excluded>(phi).detail.find("b12=1/2"), std::string::npos);

  NumberField f2 = sqrt_field(2);
  Flow silver = make_flow(f2, {f2.one(), f2.one() + f2.generator()});
  EXPECT_EQ(matrix_of(multiplier_matrix(silver, f2.one() + f2.generator())),
            (IntMatrix{{0, 1}, {1, 2}}));

  NumberField c = cubic_field();
  FieldElement b = c.generator();
  Flow cubic = make_flow(c, {b * b, b, c.one()});
  EXPECT_EQ(matrix_of(multiplier_matrix(cubic, b * b + b + c.one())),
            (IntMatrix{{3, 1, 2}, {2, 1, 1}, {1, 1, 1}}));

  Biquadratic q;
  Flow four = make_flow(q.f, {q.s6, q.s3, q.s2, q.f.one()});
  FieldElement alpha = Rational(2) * q.s6 + Rational(4) * q.s3 + Rational(5) * q.s2 +
                       Rational(5) * q.f.one();
  EXPECT_EQ(matrix_of(multiplier_matrix(four, alpha)),
            (IntMatrix{{5, 10, 12, 12}, {5, 5, 6, 12}, {4, 4, 5, 10}, {2, 4, 5, 5}}));
  auto half = multiplier_matrix(four, Rational(1, 2) * (q.s2 + q.s6));
  ASSERT_TRUE(std::holds_alternative<Excluded>(half));
  EXPECT_EQ(std::get<Excluded>(half).reason, ExclusionReason::non_integer_entry);

  // Integer but not unimodular: 2 is not a unit.
  auto two = multiplier_matrix(e1, f5.from_rational(2));
  ASSERT_TRUE(std::holds_alternative<Excluded>(two));
  EXPECT_EQ(std::get<Excluded>(two).reason, ExclusionReason::not_unimodular);
  EXPECT_THROW(multiplier_matrix(e1, f2.generator()), FieldMismatch);
}

TEST(Symmetry, CubicExampleWithTheOtherGenerator) {
  // With b the root of z^3 + z - 1 the displayed matrix does not solve the
  // equations: the multiplier read from the last row is b^-2 + b^-1 + 1.
  NumberField c = cubic_field_reciprocal();
  FieldElement b = c.generator();
  Flow cubic = make_flow(c, {b * b, b, c.one()});
  IntMatrix shown{{3, 1, 2}, {2, 1, 1}, {1, 1, 1}};
  auto r = multiplier_of_matrix(cubic, shown);
  ASSERT_TRUE(std::holds_alternative<Excluded>(r));
  EXPECT_EQ(std::get<Excluded>(r).reason, ExclusionReason::inconsistent);
  // The same matrix is a symmetry of the reversed flow (1, b, b^2).
  Flow reversed = make_flow(c, {c.one(), b, b * b});
  FieldElement alpha = value_of(multiplier_of_matrix(reversed, shown));
  FieldElement binv = inverse(b);
  EXPECT_EQ(alpha, binv * binv + binv + c.one());
}

TEST(Symmetry, MultiplierOfMatrixExamples) {
  NumberField c = cubic_field();
  FieldElement b = c.generator();
  Flow cubic = make_flow(c, {b * b, b, c.one()});
  EXPECT_EQ(value_of(multiplier_of_matrix(cubic, IntMatrix{{3, 1, 2}, {2, 1, 1}, {1, 1, 1}})),
            b * b + b + c.one());
  EXPECT_EQ(value_of(multiplier_of_matrix(cubic, IntMatrix::identity(3))), c.one());
  IntMatrix minus = IntMatrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) minus(i, i) = -1;
  EXPECT_EQ(value_of(multiplier_of_matrix(cubic, minus)), -c.one());

  NumberField f2 = sqrt_field(2);
  Flow sq = make_flow(f2, {f2.one(), f2.generator()});
  auto bad = multiplier_of_matrix(sq, IntMatrix{{1, 1}, {0, 1}});
  ASSERT_TRUE(std::holds_alternative<Excluded>(bad));
  EXPECT_EQ(std::get<Excluded>(bad).reason, ExclusionReason::inconsistent);
  auto singular = multiplier_of_matrix(sq, IntMatrix{{2, 2}, {4, 2}});
  ASSERT_TRUE(std::holds_alternative<Excluded>(singular));
  EXPECT_EQ(std::get<Excluded>(singular).reason, ExclusionReason::not_unimodular);
  EXPECT_THROW(multiplier_of_matrix(sq, IntMatrix::identity(3)), Error);
}

TEST(Symmetry, ConjugacyExamples) {
  NumberField f2 = sqrt_field(2);
  Flow x = make_flow(f2, {f2.one(), f2.one() + f2.generator()});
  Flow y = make_flow(f2, {f2.one(), f2.generator()});
  EXPECT_EQ(matrix_of(conjugacy_matrix(x, y)), (IntMatrix{{1, 0}, {-1, 1}}));
  EXPECT_EQ(matrix_of(conjugacy_matrix(x, x)), IntMatrix::identity(2));
  NumberField f5 = sqrt_field(5);
  Flow a = make_flow(f5, {f5.one(), f5.generator()});
  Flow b = make_flow(f5, {f5.from_rational(2), f5.generator()});
  auto r = conjugacy_matrix(a, b);
  ASSERT_TRUE(std::holds_alternative<Excluded>(r));
  EXPECT_EQ(std::get<Excluded>(r).detail, "det = 2");
  EXPECT_THROW(conjugacy_matrix(a, y), FieldMismatch);
}

TEST(Symmetry, MultiplierGroupReports) {
  NumberField f5 = sqrt_field(5);
  Flow e1 = make_flow(f5, {f5.one(), f5.generator()});
  MultiplierReport r = multiplier_group(e1);
  EXPECT_EQ(r.kind, ReportKind::quadratic_full);
  EXPECT_EQ(*r.generator, f5.from_rational(2) + f5.generator());
  EXPECT_EQ(*r.index, 3);
  FieldElement phi = Rational(1, 2) * (f5.one() + f5.generator());
  EXPECT_EQ(pow(phi, 3), *r.generator);
  EXPECT_EQ(r.ambient_unit_group->fundamental_unit, phi);
  EXPECT_TRUE(contains(multipliers(r.verified_members), f5.one()));
  EXPECT_TRUE(contains(multipliers(r.verified_members), -f5.one()));
  for (auto const& s : r.verified_members) EXPECT_TRUE(is_unit(s.multiplier));
  for (std::size_t i = 1; i < r.verified_members.size(); ++i) {
    EXPECT_LT(compare(r.verified_members[i - 1].multiplier, r.verified_members[i].multiplier), 0);
  }

  MultiplierReport g = multiplier_group(make_flow(f5, {f5.one(), phi}));
  EXPECT_EQ(*g.generator, phi);
  EXPECT_EQ(*g.index, 1);
  NumberField f2 = sqrt_field(2);
  MultiplierReport s = multiplier_group(make_flow(f2, {f2.one(), f2.generator()}));
  EXPECT_EQ(*s.generator, f2.one() + f2.generator());
  EXPECT_EQ(*s.index, 1);

  Biquadratic q;
  Flow four = make_flow(q.f, {q.s6, q.s3, q.s2, q.f.one()});
  FieldElement half = Rational(1, 2) * (q.s2 + q.s6);
  MultiplierReport m = multiplier_group(four, {half});
  EXPECT_EQ(m.kind, ReportKind::membership_only);
  EXPECT_EQ(m.verified_members.size(), 2u);
  ASSERT_EQ(m.excluded_candidates.size(), 1u);
  EXPECT_EQ(m.excluded_candidates[0].first, half);

  NumberField r3 = cube_root_two();
  Flow partial = make_flow(r3, {r3.one(), r3.generator()});
  EXPECT_THROW(multiplier_group(partial), Error);

  Flow pi = make_numeric_flow({"1", "3.14159265358979323846264338327950288419716939937510"});
  MultiplierReport t = multiplier_group(pi);
  EXPECT_EQ(t.kind, ReportKind::trivial_numeric);
  ASSERT_EQ(t.evidence.size(), 1u);
  EXPECT_EQ(t.evidence[0].kind, ProbeKind::no_relation);
}

TEST(Symmetry, IntegralBasisFlowHasFullUnitGroup) {
  for (long d : small_squarefree()) {
    NumberField f = sqrt_field(d);
    Flow x = integral_basis_flow(f, {f.one(), omega(f, d)});
    MultiplierReport r = multiplier_group(x);
    EXPECT_EQ(*r.index, 1) << "d = " << d;
    EXPECT_EQ(*r.generator, pell_fundamental_unit(f, d));
  }
  NumberField f5 = sqrt_field(5);
  EXPECT_THROW(integral_basis_flow(f5, {f5.one(), f5.generator()}), Error);
}

TEST(Symmetry, EnumerationGuardAndEdges) {
  NumberField f5 = sqrt_field(5);
  Flow e1 = make_flow(f5, {f5.one(), f5.generator()});
  EXPECT_THROW(enumerate_multipliers_bounded(e1, 50), GuardExceeded);
  EXPECT_TRUE(enumerate_multipliers_bounded(e1, 0).empty());
  EXPECT_THROW(enumerate_multipliers_bounded(e1, -1), Error);
  auto one = multipliers(enumerate_multipliers_bounded(e1, 1));
  EXPECT_EQ(one, (std::vector<FieldElement>{-f5.one(), f5.one()}));
  auto five = multipliers(enumerate_multipliers_bounded(e1, 5));
  FieldElement u = f5.from_rational(2) + f5.generator();
  std::vector<FieldElement> expected{-u, -f5.one(), -inverse(u), inverse(u), f5.one(), u};
  EXPECT_EQ(five, expected);
}

TEST(Symmetry, RowFirstEnumerationMatchesNaiveScan) {
  for (auto const& flow : quadratic_flows()) {
    for (long bound : {2L, 3L}) {
      auto fast = multipliers(enumerate_multipliers_bounded(flow, bound));
      auto naive = naive_multipliers(flow, bound);
      std::sort(naive.begin(), naive.end(),
                [](auto const& a, auto const& b) { return compare(a, b) < 0; });
      EXPECT_EQ(fast, naive);
    }
  }
  NumberField c = cubic_field();
  FieldElement b = c.generator();
  Flow cubic = make_flow(c, {b * b, b, c.one()});
  auto fast = multipliers(enumerate_multipliers_bounded(cubic, 1));
  auto naive = naive_multipliers(cubic, 1);
  EXPECT_EQ(fast.size(), naive.size());
  for (auto const& x : naive) EXPECT_TRUE(contains(fast, x));
}

TEST(Symmetry, EnumeratedMultipliersAreUnits) {
  for (auto const& flow : quadratic_flows()) {
    for (auto const& s : enumerate_multipliers_bounded(flow, 8)) {
      EXPECT_TRUE(is_algebraic_integer(s.multiplier));
      EXPECT_EQ(abs(norm(s.multiplier)), 1);
    }
  }
}

TEST(Symmetry, EnumerationEqualsUnitPowersOnIntegralBases) {
  for (long d : small_squarefree()) {
    NumberField f = sqrt_field(d);
    std::vector<FieldElement> basis{f.one(), omega(f, d)};
    Flow flow = make_flow(f, basis);
    FieldElement eps = pell_fundamental_unit(f, d);
    // Oracle: rows of B are the basis coordinates of u * basis[i].
    auto fits = [&](FieldElement const& u, long bound) {
      for (auto const& a : basis) {
        FieldElement x = u * a;
        // x = c0 + c1 * omega
        Rational c1 = d % 4 == 1 ? 2 * x.coord(1) : x.coord(1);
        Rational c0 = d % 4 == 1 ? x.coord(0) - x.coord(1) : x.coord(0);
        if (abs(c0) > bound || abs(c1) > bound) return false;
      }
      return true;
    };
    for (long bound : {8L}) {
      std::vector<FieldElement> oracle;
      for (long m = -12; m <= 12; ++m) {
        for (int s : {-1, 1}) {
          FieldElement u = Rational(s) * pow(eps, m);
          if (fits(u, bound)) oracle.push_back(u);
        }
      }
      std::sort(oracle.begin(), oracle.end(),
                [](auto const& a, auto const& b) { return compare(a, b) < 0; });
      EXPECT_EQ(multipliers(enumerate_multipliers_bounded(flow, bound)), oracle) << "d = " << d;
    }
    IntMatrix me = matrix_of(multiplier_matrix(flow, eps));
    long needed = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) needed = std::max(needed, Integer(abs(me(i, j))).get_si());
    }
    EXPECT_TRUE(contains(multipliers(enumerate_multipliers_bounded(flow, needed)), eps));
    EXPECT_FALSE(contains(multipliers(enumerate_multipliers_bounded(flow, needed - 1)), eps));
  }
}

TEST(Symmetry, RoundTripAndGroupLaw) {
  int checked = 0;
  for (auto const& flow : quadratic_flows()) {
    FieldElement g = *multiplier_group(flow).generator;
    std::vector<SymmetrySolution> sols;
    for (long m = -12; m <= 12; ++m) {
      for (int s : {-1, 1}) {
        FieldElement alpha = Rational(s) * pow(g, m);
        auto b = multiplier_matrix(flow, alpha);
        ASSERT_TRUE(std::holds_alternative<UnimodularMatrix>(b));
        UnimodularMatrix u = std::get<UnimodularMatrix>(b);
        EXPECT_EQ(value_of(multiplier_of_matrix(flow, u.matrix())), alpha);
        sols.push_back({u, alpha});
        ++checked;
      }
    }
    for (std::size_t i = 0; i < sols.size(); i += 3) {
      for (std::size_t j = 0; j < sols.size(); j += 5) {
        auto const& s1 = sols[i];
        auto const& s2 = sols[j];
        UnimodularMatrix prod = s2.matrix * s1.matrix;
        EXPECT_EQ(prod, s1.matrix * s2.matrix);
        EXPECT_EQ(matrix_of(multiplier_matrix(flow, s1.multiplier * s2.multiplier)), prod.matrix());
      }
      EXPECT_EQ(matrix_of(multiplier_matrix(flow, inverse(sols[i].multiplier))),
                sols[i].matrix.inverse().matrix());
    }
  }
  EXPECT_GE(checked, 500);
}

TEST(Symmetry, ScaleInvariance) {
  std::mt19937_64 rng(41);
  Biquadratic q;
  NumberField c = cubic_field();
  FieldElement b = c.generator();
  std::vector<std::pair<Flow, FieldElement>> cases{
      {make_flow(q.f, {q.s6, q.s3, q.s2, q.f.one()}),
       Rational(2) * q.s6 + Rational(4) * q.s3 + Rational(5) * q.s2 + Rational(5) * q.f.one()},
      {make_flow(c, {b * b, b, c.one()}), b * b + b + c.one()}};
  for (auto const& flow : quadratic_flows()) {
    cases.emplace_back(flow, *multiplier_group(flow).generator);
  }
  for (auto const& [flow, alpha] : cases) {
    auto base = multiplier_matrix(flow, alpha);
    auto excluded = multiplier_matrix(flow, Rational(1, 2) * alpha);
    for (int t = 0; t < 10; ++t) {
      FieldElement mu = random_nonzero(flow.field(), rng);
      std::vector<FieldElement> scaled;
      for (auto const& a : flow.components()) scaled.push_back(mu * a);
      Flow sf = make_flow(flow.field(), scaled);
      EXPECT_EQ(matrix_of(multiplier_matrix(sf, alpha)), matrix_of(base));
      auto ex = multiplier_matrix(sf, Rational(1, 2) * alpha);
      ASSERT_TRUE(std::holds_alternative<Excluded>(ex));
      EXPECT_EQ(std::get<Excluded>(ex).detail, std::get<Excluded>(excluded).detail);
    }
  }
}

TEST(Symmetry, ConjugateFlowsShareMultipliers) {
  NumberField f2 = sqrt_field(2);
  Flow x = make_flow(f2, {f2.one(), f2.one() + f2.generator()});
  Flow y = make_flow(f2, {f2.one(), f2.generator()});
  UnimodularMatrix c = std::get<UnimodularMatrix>(conjugacy_matrix(x, y));
  for (auto const& s : enumerate_multipliers_bounded(x, 6)) {
    UnimodularMatrix moved = c * s.matrix * c.inverse();
    EXPECT_EQ(value_of(multiplier_of_matrix(y, moved.matrix())), s.multiplier);
  }
  for (auto const& s : enumerate_multipliers_bounded(y, 6)) {
    UnimodularMatrix moved = c.inverse() * s.matrix * c;
    EXPECT_EQ(value_of(multiplier_of_matrix(x, moved.matrix())), s.multiplier);
  }
  MultiplierReport rx = multiplier_group(x), ry = multiplier_group(y);
  EXPECT_EQ(*rx.generator, *ry.generator);
  EXPECT_EQ(*rx.index, *ry.index);
}

TEST(Symmetry, SilverFamily) {
  NumberField f2 = sqrt_field(2);
  FieldElement silver = f2.one() + f2.generator();
  Flow x = make_flow(f2, {f2.one(), silver});
  int members = 0;
  for (long u1 = -5; u1 <= 5; ++u1) {
    for (long u2 = -5; u2 <= 5; ++u2) {
      IntMatrix b{{-2 * u1 + u2, u1}, {u1, u2}};
      if (abs(cofactor_det(b)) != 1) continue;
      ++members;
      EXPECT_EQ(value_of(multiplier_of_matrix(x, b)),
                f2.from_rational(-2 * u1 + u2) + Rational(u1) * silver);
    }
  }
  EXPECT_EQ(members, 12);
}

TEST(Symmetry, CubicFamily) {
  NumberField c = cubic_field();
  FieldElement b = c.generator();
  Flow y = make_flow(c, {b * b, b, c.one()});
  int members = 0;
  for (long u1 = -3; u1 <= 3; ++u1) {
    for (long u2 = -3; u2 <= 3; ++u2) {
      for (long u3 = -3; u3 <= 3; ++u3) {
        IntMatrix m{{u1 + u2 + u3, u1, u1 + u2}, {u1 + u2, u3, u1}, {u1, u2, u3}};
        if (abs(cofactor_det(m)) != 1) continue;
        ++members;
        EXPECT_EQ(value_of(multiplier_of_matrix(y, m)),
                  Rational(u1) * b * b + Rational(u2) * b + c.from_rational(u3));
      }
    }
  }
  EXPECT_EQ(members, 30);
}

TEST(Classify, ExactFlows) {
  NumberField f5 = sqrt_field(5);
  Classification a = classify_flow(make_flow(f5, {f5.one(), f5.generator()}));
  EXPECT_EQ(a.kind, FlowClass::algebraic);
  EXPECT_EQ(a.field->min_poly(), f5.min_poly());

  Biquadratic q;
  Classification b = classify_flow(make_flow(q.f, {q.s6, q.s3, q.s2, q.f.one()}));
  EXPECT_EQ(b.kind, FlowClass::algebraic);
  EXPECT_EQ(to_string(b.field->min_poly()), "z^4 - 10*z^2 + 1");

  NumberField r = cube_root_two();
  Classification t = classify_flow(make_flow(r, {r.one(), r.generator()}));
  EXPECT_EQ(t.kind, FlowClass::transcendental_by_definition);
  EXPECT_FALSE(t.field);

  Classification sub = classify_flow(make_flow(q.f, {q.s2, q.s6}));
  EXPECT_EQ(sub.kind, FlowClass::algebraic);
  EXPECT_EQ(to_string(sub.field->min_poly()), "z^2 - 3");
  EXPECT_EQ(sub.field->root_index(), 1);
  EXPECT_EQ(*sub.primitive_element, q.s3);

  Classification half = classify_flow(make_flow(q.f, {q.f.one(), Rational(1, 3) * q.s2 - q.f.one()}));
  EXPECT_EQ(half.kind, FlowClass::algebraic);
  EXPECT_EQ(half.field->degree(), 2);
  EXPECT_EQ(to_decimal(half.field->generator(), 20), to_decimal(*half.primitive_element, 20));

  Classification none = classify_flow(make_flow(q.f, {q.f.one(), q.s2, q.s3}));
  EXPECT_EQ(none.kind, FlowClass::transcendental_by_definition);
}

TEST(Classify, NumericFlows) {
  Flow pi = make_numeric_flow(
      {"1", "3.141592653589793238462643383279502884197169399375105820974944592307816"});
  Classification c = classify_flow(pi);
  EXPECT_EQ(c.kind, FlowClass::numeric_undetermined);
  EXPECT_NE(c.detail.find("only +-1 up to bounds"), std::string::npos);
  ASSERT_EQ(c.evidence.size(), 1u);
  EXPECT_EQ(c.evidence[0].kind, ProbeKind::no_relation);

  Flow silver = make_numeric_flow(
      {"2", "4.828427124746190097603377448419396157139343750753896146353359475981464"});
  Classification s = classify_flow(silver);
  EXPECT_EQ(s.kind, FlowClass::numeric_undetermined);
  ASSERT_EQ(s.evidence.size(), 1u);
  EXPECT_EQ(s.evidence[0].kind, ProbeKind::relation_found);
  EXPECT_EQ(to_string(*s.evidence[0].witness), "z^2 - 2*z - 1");

  Flow short_input = make_numeric_flow({"1", "3.14159"});
  EXPECT_EQ(classify_flow(short_input).kind, FlowClass::numeric_undetermined);
  EXPECT_TRUE(classify_flow(short_input).evidence.empty());
}

TEST(Symmetry, HigherDegreeMembershipAgreesWithCoefficientOrderUnits) {
  // alpha is a multiplier iff it is a unit of the coefficient order of the
  // component lattice; both sides are computed on small elements.
  Biquadratic q;
  NumberField c = cubic_field();
  FieldElement b = c.generator();
  std::vector<Flow> flows{make_flow(q.f, {q.s6, q.s3, q.s2, q.f.one()}),
                          make_flow(q.f, {Rational(1, 2) * (q.s2 + q.s6), q.s6, q.s3, q.f.one()}),
                          make_flow(c, {b * b, b, c.one()})};
  std::mt19937_64 rng(5);
  int units = 0;
  for (auto const& flow : flows) {
    FieldLattice order = coefficient_order(FieldLattice(flow.components()));
    std::vector<FieldElement> trial;
    for (auto const& x : order.basis()) {
      for (auto const& y : order.basis()) trial.push_back(x + y);
      trial.push_back(x);
    }
    for (int t = 0; t < 200; ++t) trial.push_back(random_element(flow.field(), rng, 3, 2));
    FieldElement known = flow.field().degree() == 3 ? b * b + b + c.one()
                                                    : Rational(2) * q.s6 + Rational(4) * q.s3 +
                                                          Rational(5) * q.s2 + Rational(5) * q.f.one();
    trial.push_back(known);
    trial.push_back(inverse(known));
    for (auto const& alpha : trial) {
      if (alpha.is_zero()) continue;
      bool in_order_units = order.contains(alpha) && order.contains(inverse(alpha));
      bool symmetric = std::holds_alternative<UnimodularMatrix>(multiplier_matrix(flow, alpha));
      EXPECT_EQ(symmetric, in_order_units) << to_string(alpha);
      units += symmetric;
    }
  }
  EXPECT_GE(units, 6);
}
