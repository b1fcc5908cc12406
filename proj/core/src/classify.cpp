#include "qpflow/classify.hpp"

#include <algorithm>
#include <sstream>

#include "qpflow/errors.hpp"

namespace qpflow {

std::string to_string(FlowClass kind) {
  switch (kind) {
    case FlowClass::algebraic: return "algebraic";
    case FlowClass::transcendental_by_definition: return "transcendental_by_definition";
    case FlowClass::numeric_undetermined: return "numeric_undetermined";
  }
  return "unknown";
}

namespace {

RatMatrix coordinate_rows(std::vector<FieldElement> const& xs) {
  std::vector<std::vector<Rational>> rows;
  for (auto const& x : xs) rows.emplace_back(x.coords().begin(), x.coords().end());
  return RatMatrix::from_rows(rows);
}

// Index of the real root of q enclosed together with x.
int locate_root(IntPoly const& q, FieldElement const& x) {
  std::vector<Interval> roots = isolate_real_roots(q);
  Rational width(1, 1024);
  while (true) {
    Interval ex = enclose(x, width);
    int hit = -1;
    int hits = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Interval r = refine_root(q, roots[i], width);
      if (r.hi >= ex.lo && r.lo <= ex.hi) {
        hit = static_cast<int>(i);
        ++hits;
      }
    }
    if (hits == 1) return hit;
    if (hits == 0) throw Error("element is not a root of its own minimal polynomial");
    width /= 1024;
  }
}

// Monic integer polynomial of D x, where D clears the denominators of the
// minimal polynomial of x.
std::pair<IntPoly, Integer> integral_scaling(RatPoly const& minpoly) {
  Integer d = 1;
  for (auto const& c : minpoly.coefficients()) d = lcm(d, Integer(c.get_den()));
  int n = minpoly.degree();
  std::vector<Integer> coeffs(n + 1);
  Integer scale = 1;
  for (int k = n; k >= 0; --k, scale *= d) {
    Rational c = minpoly.coefficient(k) * Rational(scale);
    coeffs[k] = c.get_num();
  }
  return {IntPoly(coeffs), d};
}

Classification classify_exact(Flow const& flow) {
  auto const& a = flow.components();
  NumberField const& ambient = flow.field();
  std::size_t m = a.size();
  Classification out;
  out.kind = FlowClass::algebraic;
  if (m == static_cast<std::size_t>(ambient.degree())) {
    out.field = ambient;
    out.primitive_element = ambient.generator();
    out.detail = "W = (1/a1) span(a) is the whole field of degree " + std::to_string(m);
    return out;
  }
  std::vector<FieldElement> w;
  for (auto const& x : a) w.push_back(x / a[0]);
  RatMatrix rows = coordinate_rows(w);
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      FieldElement p = w[i] * w[j];
      if (!solve_in_row_space(rows, p.coords())) {
        std::ostringstream detail;
        detail << "W = (1/a1) span(a) is not closed: (a" << i + 1 << "/a1)*(a" << j + 1
               << "/a1) = " << to_string(p) << " is not in W";
        out.kind = FlowClass::transcendental_by_definition;
        out.detail = detail.str();
        return out;
      }
    }
  }
  // W is a subfield of degree m; find an element generating it.
  std::optional<FieldElement> theta;
  for (long c = 1; c <= 64 && !theta; ++c) {
    FieldElement t = w[1];
    Rational coef = c;
    for (std::size_t i = 2; i < m; ++i, coef *= c) t = t + coef * w[i];
    if (minimal_polynomial(t).degree() == static_cast<int>(m)) theta = t;
  }
  if (!theta) throw Error("no primitive element found for a closed subspace");
  auto [q, d] = integral_scaling(minimal_polynomial(*theta));
  FieldElement scaled = Rational(d) * *theta;
  out.field = make_field(q, locate_root(q, scaled));
  out.primitive_element = scaled;
  out.detail = "W = (1/a1) span(a) is closed under multiplication; F = Q(" + to_string(scaled) +
               ") of degree " + std::to_string(m);
  return out;
}

Classification classify_numeric(Flow const& flow) {
  auto const& v = flow.numeric_values();
  std::size_t n = v.size();
  // Integer literals such as "1" are exact and do not limit the precision.
  int digits = ProbeDefaults::precision_digits;
  for (auto const& x : v) {
    if (x.fraction_digits > 0) digits = std::min(digits, x.fraction_digits);
  }
  Classification out;
  out.kind = FlowClass::numeric_undetermined;
  int degree = static_cast<int>(n);
  if (digits < 10 * degree) {
    out.detail = "too few digits to probe: have " + std::to_string(digits) + ", need " +
                 std::to_string(10 * degree);
    return out;
  }
  std::ostringstream found;
  for (std::size_t i = 1; i < n; ++i) {
    std::string ratio = to_decimal(v[i].value / v[0].value, digits);
    ProbeVerdict pv = n == 2 ? t2_symmetry_probe(ratio, digits, ProbeDefaults::height_bound())
                             : minpoly_from_decimal(ratio, degree, ProbeDefaults::height_bound(),
                                                    digits);
    if (pv.kind == ProbeKind::relation_found) {
      found << (found.tellp() > 0 ? "; " : "") << "a" << i + 1 << "/a1: " << describe(pv);
    }
    out.evidence.push_back(std::move(pv));
  }
  if (found.tellp() > 0) {
    out.detail = "relations found (" + found.str() + "); enter the flow exactly to classify";
  } else {
    out.detail = "only +-1 up to bounds: " + describe(out.evidence.front());
  }
  return out;
}

}  // namespace

Classification classify_flow(Flow const& flow) {
  return flow.is_exact() ? classify_exact(flow) : classify_numeric(flow);
}

}  // namespace qpflow
