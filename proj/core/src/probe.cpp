#include "qpflow/probe.hpp"

#include <sstream>

#include "qpflow/errors.hpp"
#include "qpflow/lll.hpp"

namespace qpflow {

std::string to_string(ProbeKind kind) {
  return kind == ProbeKind::relation_found ? "relation_found" : "no_relation";
}

std::string to_scientific(Rational const& q) {
  if (q == 0) return "0";
  Rational v = abs(q);
  long exponent = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 10)) -
                  static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 10));
  // Normalize v * 10^-exponent into [1, 10).
  auto scaled = [&](long e) {
    return e >= 0 ? Rational(v / Rational(pow10(static_cast<unsigned>(e))))
                  : Rational(v * Rational(pow10(static_cast<unsigned>(-e))));
  };
  Rational m = scaled(exponent);
  while (m >= 10) m = scaled(++exponent);
  while (m < 1) m = scaled(--exponent);
  std::string mantissa = to_decimal(m, 1);
  if (mantissa == "10.0") {
    mantissa = "1.0";
    ++exponent;
  }
  return (q < 0 ? "-" : "") + mantissa + "e" + std::to_string(exponent);
}

std::string describe(ProbeVerdict const& v) {
  std::ostringstream out;
  if (v.kind == ProbeKind::relation_found) {
    out << "relation_found " << to_string(*v.witness) << " (|p(x)| = " << to_scientific(v.residual)
        << ")";
    if (v.degenerate_rational) out << " [rational: not quasiperiodic]";
  } else {
    out << "no_relation";
  }
  out << " [degree <= " << v.degree_bound << ", height <= " << v.height_bound.get_str()
      << ", precision " << v.precision_digits << " digits]";
  return out.str();
}

ProbeVerdict minpoly_from_decimal(std::string_view x, int max_degree, Integer const& height_bound,
                                  int precision_digits) {
  Decimal const dec = parse_decimal(x);
  if (max_degree < 1) throw InvalidArgument("max_degree must be at least 1");
  if (height_bound < 1) throw InvalidArgument("height_bound must be at least 1");
  int const precision = std::min(precision_digits, dec.fraction_digits);
  if (precision < 10 * max_degree) {
    throw InvalidArgument("insufficient precision: need at least " + std::to_string(10 * max_degree) +
                          " digits for degree " + std::to_string(max_degree) + ", have " +
                          std::to_string(precision));
  }
  Rational const& value = dec.value;
  Integer const scale = pow10(static_cast<unsigned>(precision));
  Rational const threshold = make_rational(1, pow10(static_cast<unsigned>(precision / 2)));
  Rational const margin = make_rational(1, pow10(static_cast<unsigned>(precision / 4)));

  ProbeVerdict verdict;
  verdict.degree_bound = max_degree;
  verdict.height_bound = height_bound;
  verdict.precision_digits = precision;

  for (int d = 1; d <= max_degree; ++d) {
    std::size_t const rows = static_cast<std::size_t>(d) + 1;
    std::vector<IntVector> basis(rows, IntVector(rows + 1, Integer(0)));
    Rational power = 1;
    for (std::size_t k = 0; k < rows; ++k) {
      basis[k][k] = 1;
      basis[k][rows] = round_nearest(power * scale);
      power *= value;
    }
    auto const reduced = lll_reduce(std::move(basis));
    std::optional<IntPoly> best;
    Rational best_residual;
    for (auto const& row : reduced) {
      IntPoly const p(IntVector(row.begin(), row.begin() + static_cast<long>(rows)));
      if (p.degree() < 1) continue;
      if (height(p) > height_bound) continue;
      Rational const residual = abs(p.evaluate(value));
      if (residual >= threshold) continue;
      // Any x has relations with |p(x)| about height^-degree; only a residual
      // well below that says anything about x.
      Rational generic = 1;
      for (int k = 0; k < p.degree(); ++k) generic *= Rational(height(p) + 1);
      if (residual * generic >= margin) continue;
      if (!best || height(p) < height(*best)) {
        best = p;
        best_residual = residual;
      }
    }
    if (best) {
      verdict.kind = ProbeKind::relation_found;
      verdict.witness = primitive_part(*best);
      verdict.residual = abs(verdict.witness->evaluate(value));
      verdict.degenerate_rational = verdict.witness->degree() == 1;
      return verdict;
    }
  }
  verdict.kind = ProbeKind::no_relation;
  return verdict;
}

ProbeVerdict t2_symmetry_probe(std::string_view x, int precision_digits, Integer const& height_bound) {
  return minpoly_from_decimal(x, 2, height_bound, precision_digits);
}

}  // namespace qpflow
