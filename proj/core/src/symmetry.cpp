#include "qpflow/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qpflow/classify.hpp"
#include "qpflow/errors.hpp"

namespace qpflow {

std::string to_string(ExclusionReason reason) {
  switch (reason) {
    case ExclusionReason::non_integer_entry: return "non-integer entry";
    case ExclusionReason::not_unimodular: return "not unimodular";
    case ExclusionReason::inconsistent: return "inconsistent equations";
    case ExclusionReason::not_in_span: return "not in span";
  }
  return "unknown";
}

std::string to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::quadratic_full: return "quadratic_full";
    case ReportKind::membership_only: return "membership_only";
    case ReportKind::trivial_numeric: return "trivial_numeric";
  }
  return "unknown";
}

namespace {

void require_exact(Flow const& flow) {
  if (!flow.is_exact()) throw InvalidArgument("operation needs a flow with exact components");
}

// Coordinates of field elements with respect to the components of a flow.
class ComponentSolver {
 public:
  explicit ComponentSolver(Flow const& flow) {
    auto const& comps = flow.components();
    std::vector<std::vector<Rational>> rows;
    for (auto const& a : comps) rows.emplace_back(a.coords().begin(), a.coords().end());
    a_ = RatMatrix::from_rows(rows);
    if (a_.is_square()) a_inv_ = inverse(a_);
  }

  std::optional<std::vector<Rational>> solve(FieldElement const& x) const {
    if (a_inv_) {
      std::vector<Rational> out(a_.rows(), Rational(0));
      for (std::size_t j = 0; j < a_.rows(); ++j) {
        for (std::size_t k = 0; k < a_.cols(); ++k) out[j] += x.coord(k) * (*a_inv_)(k, j);
      }
      return out;
    }
    return solve_in_row_space(a_, x.coords());
  }

 private:
  RatMatrix a_;
  std::optional<RatMatrix> a_inv_;
};

// Rows of B: coordinates of targets[i] in the components of the flow.
Outcome<RatMatrix> forced_matrix(ComponentSolver const& solver,
                                 std::vector<FieldElement> const& targets) {
  std::size_t n = targets.size();
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = solver.solve(targets[i]);
    if (!row) {
      return Excluded{ExclusionReason::not_in_span,
                      "row " + std::to_string(i + 1) + " is outside the span of the components"};
    }
    for (std::size_t j = 0; j < n; ++j) b(i, j) = (*row)[j];
  }
  return b;
}

Outcome<UnimodularMatrix> unimodular_from(RatMatrix const& b) {
  std::ostringstream bad;
  bool first = true;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (is_integer(b(i, j))) continue;
      bad << (first ? "" : ", ") << 'b' << i + 1 << j + 1 << '=' << to_string(b(i, j));
      first = false;
    }
  }
  if (!first) return Excluded{ExclusionReason::non_integer_entry, bad.str()};
  IntMatrix m = *to_integer(b);
  auto u = UnimodularMatrix::make(m);
  if (!u) {
    return Excluded{ExclusionReason::not_unimodular, "det = " + to_string(integer_det(m))};
  }
  return *u;
}

Outcome<UnimodularMatrix> multiplier_matrix_with(Flow const& flow, ComponentSolver const& solver,
                                                 FieldElement const& alpha) {
  std::vector<FieldElement> targets;
  for (auto const& a : flow.components()) targets.push_back(alpha * a);
  auto b = forced_matrix(solver, targets);
  if (auto const* ex = std::get_if<Excluded>(&b)) return *ex;
  return unimodular_from(std::get<RatMatrix>(b));
}

bool by_value(SymmetrySolution const& a, SymmetrySolution const& b) {
  return compare(a.multiplier, b.multiplier) < 0;
}

}  // namespace

Outcome<UnimodularMatrix> multiplier_matrix(Flow const& flow, FieldElement const& alpha) {
  require_exact(flow);
  if (!(alpha.field() == flow.field())) throw FieldMismatch();
  if (alpha.is_zero()) return Excluded{ExclusionReason::not_unimodular, "det = 0"};
  return multiplier_matrix_with(flow, ComponentSolver(flow), alpha);
}

Outcome<FieldElement> multiplier_of_matrix(Flow const& flow, IntMatrix const& b) {
  require_exact(flow);
  auto const& a = flow.components();
  std::size_t n = a.size();
  if (b.rows() != n || b.cols() != n) {
    throw InvalidArgument("matrix shape does not match the flow dimension");
  }
  auto row_image = [&](std::size_t i) {
    FieldElement s = flow.field().zero();
    for (std::size_t j = 0; j < n; ++j) s = s + Rational(b(i, j)) * a[j];
    return s;
  };
  FieldElement alpha = row_image(0) / a[0];
  for (std::size_t i = 1; i < n; ++i) {
    FieldElement lhs = alpha * a[i];
    FieldElement rhs = row_image(i);
    if (!(lhs == rhs)) {
      std::ostringstream detail;
      detail << "row 1 gives alpha = " << to_string(alpha) << ", row " << i + 1
             << " gives alpha = " << to_string(rhs / a[i]);
      return Excluded{ExclusionReason::inconsistent, detail.str()};
    }
  }
  Integer d = integer_det(b);
  if (abs(d) != 1) return Excluded{ExclusionReason::not_unimodular, "det = " + to_string(d)};
  return alpha;
}

std::vector<SymmetrySolution> enumerate_multipliers_bounded(Flow const& flow, long bound) {
  require_exact(flow);
  if (bound < 0) throw InvalidArgument("entry bound must be nonnegative");
  std::size_t n = flow.dimension();
  double work = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(n * n));
  if (work > kEnumerationGuard) {
    std::ostringstream msg;
    msg << "enumeration over (2*" << bound << "+1)^" << n * n << " matrices exceeds the guard";
    throw GuardExceeded(msg.str());
  }
  ComponentSolver solver(flow);
  auto const& a = flow.components();
  std::vector<SymmetrySolution> out;
  std::vector<long> row(n, -bound);
  while (true) {
    if (std::any_of(row.begin(), row.end(), [](long v) { return v != 0; })) {
      FieldElement image = flow.field().zero();
      for (std::size_t j = 0; j < n; ++j) image = image + Rational(row[j]) * a[j];
      FieldElement alpha = image / a[0];
      auto b = multiplier_matrix_with(flow, solver, alpha);
      if (auto const* u = std::get_if<UnimodularMatrix>(&b)) {
        bool fits = true;
        for (std::size_t i = 0; i < n && fits; ++i) {
          for (std::size_t j = 0; j < n && fits; ++j) fits = abs((*u)(i, j)) <= bound;
        }
        if (fits) out.push_back({*u, alpha});
      }
    }
    std::size_t k = 0;
    while (k < n && row[k] == bound) row[k++] = -bound;
    if (k == n) break;
    ++row[k];
  }
  std::sort(out.begin(), out.end(), by_value);
  return out;
}

Outcome<UnimodularMatrix> conjugacy_matrix(Flow const& flow1, Flow const& flow2) {
  require_exact(flow1);
  require_exact(flow2);
  if (!(flow1.field() == flow2.field())) throw FieldMismatch();
  if (flow1.dimension() != flow2.dimension()) {
    throw InvalidArgument("conjugate flows must live on tori of the same dimension");
  }
  auto b = forced_matrix(ComponentSolver(flow1), flow2.components());
  if (auto const* ex = std::get_if<Excluded>(&b)) return *ex;
  return unimodular_from(std::get<RatMatrix>(b));
}

MultiplierReport multiplier_group(Flow const& flow, std::vector<FieldElement> const& candidates) {
  if (!flow.is_exact()) {
    Classification c = classify_flow(flow);
    MultiplierReport report;
    report.kind = ReportKind::trivial_numeric;
    report.evidence = c.evidence;
    report.detail = c.detail;
    return report;
  }
  NumberField const& field = flow.field();
  if (flow.dimension() != static_cast<std::size_t>(field.degree())) {
    throw InvalidArgument("multiplier group needs as many components as the field degree");
  }
  ComponentSolver solver(flow);
  MultiplierReport report;
  report.kind = field.degree() == 2 ? ReportKind::quadratic_full : ReportKind::membership_only;
  FieldLattice order = coefficient_order(FieldLattice(flow.components()));
  report.order = order;

  std::vector<FieldElement> members{field.one(), -field.one()};
  if (field.degree() == 2) {
    UnitIndex ui = order_unit_index(order);
    report.generator = ui.generator;
    report.index = ui.index;
    report.ambient_unit_group = QuadraticUnitGroup{field, fundamental_unit_of(field)};
    FieldElement g_inv = inverse(ui.generator);
    members.insert(members.end(), {ui.generator, -ui.generator, g_inv, -g_inv});
    std::ostringstream detail;
    detail << "multipliers are +-(" << to_string(ui.generator) << ")^m, index " << ui.index
           << " in the units of the maximal order";
    report.detail = detail.str();
  } else {
    report.detail = "verified members only; completeness is not claimed in degree >= 3";
  }
  for (auto const& c : candidates) {
    if (!(c.field() == field)) throw FieldMismatch();
    if (std::find(members.begin(), members.end(), c) == members.end()) members.push_back(c);
  }
  for (auto const& m : members) {
    auto b = m.is_zero() ? Outcome<UnimodularMatrix>(Excluded{ExclusionReason::not_unimodular,
                                                              "det = 0"})
                         : multiplier_matrix_with(flow, solver, m);
    if (auto const* u = std::get_if<UnimodularMatrix>(&b)) {
      report.verified_members.push_back({*u, m});
    } else {
      report.excluded_candidates.emplace_back(m, std::get<Excluded>(b));
    }
  }
  std::sort(report.verified_members.begin(), report.verified_members.end(), by_value);
  return report;
}

Flow integral_basis_flow(NumberField const& field, std::vector<FieldElement> basis) {
  BasisVerdict v = verify_integral_basis(field, basis);
  if (v.kind != BasisVerdictKind::verified_maximal) {
    throw InvalidArgument("not a verified integral basis: " + v.reason);
  }
  return make_flow(field, std::move(basis));
}

}  // namespace qpflow
