#include "qpflow/polynomial.hpp"

#include <sstream>

#include "qpflow/errors.hpp"

namespace qpflow {

RatPoly to_rational(IntPoly const& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (auto const& z : p.coefficients()) c.emplace_back(z);
  return RatPoly(std::move(c));
}

std::optional<IntPoly> to_integer(RatPoly const& p) {
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (auto const& q : p.coefficients()) {
    if (!is_integer(q)) return std::nullopt;
    c.push_back(q.get_num());
  }
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divrem(RatPoly const& a, RatPoly const& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  int const db = b.degree();
  int const da = a.degree();
  if (da < db) return {RatPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  Rational const lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    Rational const q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * b.coefficient(j);
    }
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly make_monic(RatPoly const& p) {
  if (p.is_zero()) return p;
  Rational const inv = 1 / p.leading();
  return inv * p;
}

RatPoly gcd(RatPoly const& a, RatPoly const& b) {
  RatPoly x = a;
  RatPoly y = b;
  while (!y.is_zero()) {
    RatPoly r = divrem(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

RatPoly squarefree_part(RatPoly const& p) {
  if (p.degree() < 1) return make_monic(p);
  RatPoly const g = gcd(p, p.derivative());
  return make_monic(divrem(p, g).first);
}

Integer content(IntPoly const& p) {
  Integer g = 0;
  for (auto const& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

IntPoly primitive_part(IntPoly const& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c = p.coefficients();
  for (auto& z : c) z /= g;
  return IntPoly(std::move(c));
}

IntPoly primitive_part(RatPoly const& p) {
  Integer den = 1;
  for (auto const& q : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (auto const& q : p.coefficients()) {
    Rational const s = q * den;
    c.push_back(s.get_num());
  }
  return primitive_part(IntPoly(std::move(c)));
}

std::optional<IntPoly> divide_exact(IntPoly const& p, IntPoly const& q) {
  if (q.is_zero()) throw InvalidArgument("polynomial division by zero");
  int const dp = p.degree();
  int const dq = q.degree();
  if (p.is_zero()) return IntPoly();
  if (dp < dq) return std::nullopt;
  std::vector<Integer> rem = p.coefficients();
  std::vector<Integer> quot(static_cast<std::size_t>(dp - dq) + 1);
  Integer const& lead = q.leading();
  for (int k = dp - dq; k >= 0; --k) {
    Integer const& top = rem[static_cast<std::size_t>(k + dq)];
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer const c = top / lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dq; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= c * q.coefficient(j);
    }
  }
  for (auto const& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

Integer height(IntPoly const& p) {
  Integer h = 0;
  for (auto const& c : p.coefficients()) {
    if (abs(c) > h) h = abs(c);
  }
  return h;
}

namespace {

template <typename Coeff>
std::string render(Polynomial<Coeff> const& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Coeff const c = p.coefficient(k);
    if (c == 0) continue;
    Coeff const mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

}  // namespace

std::string to_string(IntPoly const& p, std::string_view var) {
  return render(p, var);
}
std::string to_string(RatPoly const& p, std::string_view var) {
  return render(p, var);
}

}  // namespace qpflow
