#include "qpflow/orders.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>

namespace qpflow {

bool is_squarefree(long d) {
  if (d == 0) return false;
  long m = d < 0 ? -d : d;
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

namespace {

void require_real_quadratic(long d) {
  if (d < 2 || !is_squarefree(d)) {
    throw InvalidArgument("expected a squarefree integer d >= 2, got " + std::to_string(d));
  }
}

Integer isqrt(Integer const& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

NumberField quadratic_field(long d) {
  require_real_quadratic(d);
  return make_field(IntPoly{Integer(-d), Integer(0), Integer(1)}, 1);
}

std::vector<FieldElement> quadratic_integral_basis(long d) {
  NumberField const f = quadratic_field(d);
  if (d % 4 == 1) {
    return {f.one(), f.element({Rational(1, 2), Rational(1, 2)})};
  }
  return {f.one(), f.generator()};
}

QuadraticUnitGroup fundamental_unit(long d) {
  require_real_quadratic(d);
  NumberField const f = quadratic_field(d);
  Integer const big_d(d);
  Integer const s = isqrt(big_d);
  bool const half = d % 4 == 1;
  // x_k = (P + sqrt d) / Q with Q | d - P^2; x_0 = sqrt d or (1 + sqrt d)/2.
  Integer p_state = half ? 1 : 0;
  Integer q_state = half ? 2 : 1;
  Integer p_prev = 1, p_prev2 = 0;
  Integer q_prev = 0, q_prev2 = 1;
  std::set<std::pair<Integer, Integer>> seen;
  Integer const quarter = (big_d - 1) / 4;
  while (seen.insert({p_state, q_state}).second) {
    Integer a;
    Integer const num = p_state + s;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), q_state.get_mpz_t());
    Integer const p = a * p_prev + p_prev2;
    Integer const q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    if (!half) {
      Integer const n = p * p - big_d * q * q;
      if (abs(n) == 1) {
        return {f, f.element({Rational(p), Rational(q)})};
      }
    } else {
      // norm(p - q omega) with omega^2 = omega + (d - 1)/4
      Integer const n = p * p - p * q - q * q * quarter;
      if (abs(n) == 1 && q > 0) {
        // p - q*omega' = (p - q) + q*omega, the conjugate unit > 1
        Rational const x = Rational(p - q) + make_rational(q, 2);
        return {f, f.element({x, make_rational(q, 2)})};
      }
    }
    Integer const next_p = a * q_state - p_state;
    Integer const next_q = (big_d - next_p * next_p) / q_state;
    p_state = next_p;
    q_state = next_q;
  }
  throw Error("continued fraction period closed without a unit");
}

QuadraticPresentation quadratic_presentation(NumberField const& field) {
  if (field.degree() != 2) throw InvalidArgument("field is not quadratic");
  Integer const b = field.min_poly().coefficient(1);
  Integer const c = field.min_poly().coefficient(0);
  Integer disc = b * b - 4 * c;
  // disc = f^2 * d with d squarefree
  Integer f = 1;
  Integer d = disc;
  for (Integer p = 2; p * p <= d; ++p) {
    while (mpz_divisible_p(d.get_mpz_t(), Integer(p * p).get_mpz_t())) {
      d /= p * p;
      f *= p;
    }
  }
  if (!d.fits_slong_p()) throw InvalidArgument("discriminant too large");
  FieldElement const two_g_plus_b = Rational(2) * field.generator() + field.from_rational(Rational(b));
  FieldElement root = make_rational(1, f) * two_g_plus_b;
  if (sign(root) < 0) root = -root;
  return {d.get_si(), root};
}

FieldLattice quadratic_maximal_order(NumberField const& field) {
  auto const pres = quadratic_presentation(field);
  FieldElement const one = field.one();
  if (pres.d % 4 == 1) {
    return FieldLattice({one, Rational(1, 2) * (one + pres.sqrt_d)});
  }
  return FieldLattice({one, pres.sqrt_d});
}

FieldElement fundamental_unit_of(NumberField const& field) {
  auto const pres = quadratic_presentation(field);
  auto const group = fundamental_unit(pres.d);
  FieldElement const& eps = group.fundamental_unit;
  return field.from_rational(eps.coord(0)) + eps.coord(1) * pres.sqrt_d;
}

UnitIndex order_unit_index(FieldLattice const& order) {
  if (order.field().degree() != 2) throw InvalidArgument("order_unit_index needs a quadratic field");
  if (!is_order(order)) {
    throw InvalidArgument("lattice is not an order (must contain 1 and be closed under products)");
  }
  FieldElement const eps = fundamental_unit_of(order.field());
  FieldElement power = eps;
  constexpr long kMaxIndex = 100000;
  for (long k = 1; k <= kMaxIndex; ++k) {
    if (order.contains(power)) return {power, k};
    power = power * eps;
  }
  throw GuardExceeded("unit index exceeds 100000");
}

std::string to_string(BasisVerdictKind kind) {
  switch (kind) {
    case BasisVerdictKind::verified_maximal:
      return "verified_maximal";
    case BasisVerdictKind::verified_order_only:
      return "verified_order_only";
    case BasisVerdictKind::rejected:
      return "rejected";
  }
  return "?";
}

namespace {

// Maximal orders with a known integral basis, keyed by minimal polynomial.
std::optional<FieldLattice> known_maximal_order(NumberField const& field) {
  IntPoly const& m = field.min_poly();
  if (m == IntPoly{Integer(1), Integer(0), Integer(-10), Integer(0), Integer(1)}) {
    // g = +-sqrt2 +- sqrt3.  The formulas below give the conjugates of sqrt2,
    // sqrt3, sqrt6 fixed by the chosen root; the ring of integers is Galois
    // stable, so the spanned lattice does not depend on that choice.
    FieldElement const g = field.generator();
    FieldElement const g3 = g * g * g;
    FieldElement const sqrt2 = Rational(1, 2) * (g3 - Rational(9) * g);
    FieldElement const sqrt3 = Rational(1, 2) * (Rational(11) * g - g3);
    FieldElement const sqrt6 = Rational(1, 2) * (g * g - field.from_rational(5));
    return FieldLattice({field.one(), sqrt3, sqrt6, Rational(1, 2) * (sqrt2 + sqrt6)});
  }
  if (m == IntPoly{Integer(-1), Integer(1), Integer(0), Integer(1)}) {
    // Power basis; discriminant -31 is squarefree.
    FieldElement const g = field.generator();
    return FieldLattice({field.one(), g, g * g});
  }
  return std::nullopt;
}

bool squarefree_integer(Rational const& q) {
  if (!is_integer(q)) return false;
  Integer n = abs(q.get_num());
  if (n < 2) return false;
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_divisible_p(n.get_mpz_t(), Integer(p * p).get_mpz_t())) return false;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    if (n < p * p) break;
  }
  return true;
}

}  // namespace

BasisVerdict verify_integral_basis(NumberField const& field,
                                   std::span<FieldElement const> candidate) {
  auto reject = [](std::string reason) {
    return BasisVerdict{BasisVerdictKind::rejected, std::move(reason)};
  };
  if (candidate.size() != static_cast<std::size_t>(field.degree())) {
    return reject("expected " + std::to_string(field.degree()) + " elements");
  }
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (!(candidate[i].field() == field)) return reject("element " + std::to_string(i + 1) + " is in another field");
    if (!is_algebraic_integer(candidate[i])) {
      return reject("element " + std::to_string(i + 1) + " (" + to_string(candidate[i]) +
                    ") is not an algebraic integer");
    }
  }
  std::optional<FieldLattice> lattice;
  try {
    lattice.emplace(std::vector<FieldElement>(candidate.begin(), candidate.end()));
  } catch (InvalidArgument const&) {
    return reject("elements are rationally dependent");
  }
  if (!lattice->contains(field.one())) return reject("span does not contain 1");
  if (!is_order(*lattice)) return reject("span is not closed under multiplication");

  if (field.degree() == 2) {
    if (*lattice == quadratic_maximal_order(field)) {
      return {BasisVerdictKind::verified_maximal, "equals the maximal order of Q(sqrt d)"};
    }
    return {BasisVerdictKind::verified_order_only, "a proper suborder of the maximal order"};
  }
  if (auto const known = known_maximal_order(field)) {
    if (*lattice == *known) {
      return {BasisVerdictKind::verified_maximal, "equals the tabulated ring of integers"};
    }
    return {BasisVerdictKind::verified_order_only, "a proper suborder of the tabulated ring of integers"};
  }
  Rational const disc = discriminant(candidate);
  if (squarefree_integer(disc)) {
    return {BasisVerdictKind::verified_maximal, "discriminant " + to_string(disc) + " is squarefree"};
  }
  return {BasisVerdictKind::verified_order_only, "order verified; maximality not certified"};
}

}  // namespace qpflow
