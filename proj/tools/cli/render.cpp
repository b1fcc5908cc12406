#include "render.hpp"

#include <sstream>

namespace qpflow::cli {

std::string matrix_text(IntMatrix const& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << to_string(m(i, j));
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string element_text(FieldElement const& x) {
  return to_string(x) + " (" + to_decimal(x, kReportDigits) + ")";
}

std::string field_text(NumberField const& f) {
  return "Q(g), g root " + std::to_string(f.root_index()) + " of " + to_string(f.min_poly());
}

std::string excluded_text(Excluded const& e) { return to_string(e.reason) + " " + e.detail; }

Json integer_json(Integer const& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json rational_json(Rational const& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return to_string(q);
}

Json matrix_json(IntMatrix const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json poly_json(IntPoly const& p) {
  Json out = Json::array();
  for (auto const& c : p.coefficients()) out.push_back(integer_json(c));
  return out;
}

Json rat_poly_json(RatPoly const& p) {
  Json out = Json::array();
  for (auto const& c : p.coefficients()) out.push_back(rational_json(c));
  return out;
}

Json coords_json(FieldElement const& x) {
  Json out = Json::array();
  for (auto const& c : x.coords()) out.push_back(rational_json(c));
  return out;
}

Json element_json(FieldElement const& x) {
  return Json{{"coords", coords_json(x)},
              {"text", to_string(x)},
              {"decimal", to_decimal(x, kReportDigits)}};
}

Json field_json(NumberField const& f) {
  return Json{{"min_poly", poly_json(f.min_poly())}, {"root_index", f.root_index()}};
}

Json flow_json(Flow const& flow) {
  Json out = Json::object();
  if (flow.is_exact()) {
    out["field"] = field_json(flow.field());
    Json comps = Json::array();
    for (auto const& a : flow.components()) comps.push_back(coords_json(a));
    out["components"] = std::move(comps);
  } else {
    out["numeric"] = flow.numeric_components();
  }
  if (flow.scale_label()) out["scale_label"] = *flow.scale_label();
  return out;
}

Json lattice_json(FieldLattice const& lattice) {
  Json basis = Json::array();
  for (auto const& b : lattice.basis()) basis.push_back(coords_json(b));
  return Json{{"basis", std::move(basis)},
              {"hnf", matrix_json(lattice.canonical_hnf())},
              {"denominator", integer_json(lattice.canonical_denominator())}};
}

Json excluded_json(Excluded const& e) {
  return Json{{"reason", to_string(e.reason)}, {"detail", e.detail}};
}

Json solution_json(SymmetrySolution const& s) {
  return Json{{"multiplier", element_json(s.multiplier)},
              {"matrix", matrix_json(s.matrix.matrix())},
              {"det", s.matrix.determinant()}};
}

Json report_json(MultiplierReport const& r) {
  Json out{{"kind", to_string(r.kind)}};
  if (r.generator) out["generator"] = element_json(*r.generator);
  if (r.index) out["index"] = *r.index;
  if (r.ambient_unit_group) {
    out["fundamental_unit"] = element_json(r.ambient_unit_group->fundamental_unit);
  }
  if (r.order) out["coefficient_order"] = lattice_json(*r.order);
  Json members = Json::array();
  for (auto const& s : r.verified_members) members.push_back(solution_json(s));
  out["verified_members"] = std::move(members);
  Json excluded = Json::array();
  for (auto const& [x, e] : r.excluded_candidates) {
    excluded.push_back(Json{{"candidate", element_json(x)}, {"excluded", excluded_json(e)}});
  }
  out["excluded_candidates"] = std::move(excluded);
  if (!r.evidence.empty()) {
    Json ev = Json::array();
    for (auto const& v : r.evidence) ev.push_back(verdict_json(v));
    out["evidence"] = std::move(ev);
  }
  out["detail"] = r.detail;
  return out;
}

Json verdict_json(ProbeVerdict const& v) {
  Json out{{"kind", to_string(v.kind)}};
  if (v.witness) {
    out["witness"] = poly_json(*v.witness);
    out["witness_text"] = to_string(*v.witness);
    out["residual"] = to_scientific(v.residual);
    out["degenerate_rational"] = v.degenerate_rational;
  }
  out["degree_bound"] = v.degree_bound;
  out["height_bound"] = integer_json(v.height_bound);
  out["precision_digits"] = v.precision_digits;
  return out;
}

Json classification_json(Classification const& c) {
  Json out{{"kind", to_string(c.kind)}};
  if (c.field) out["field"] = field_json(*c.field);
  if (c.primitive_element) out["primitive_element"] = element_json(*c.primitive_element);
  out["detail"] = c.detail;
  if (!c.evidence.empty()) {
    Json ev = Json::array();
    for (auto const& v : c.evidence) ev.push_back(verdict_json(v));
    out["evidence"] = std::move(ev);
  }
  return out;
}

}  // namespace qpflow::cli
