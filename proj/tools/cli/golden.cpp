#include "golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "expression.hpp"
#include "qpflow/orders.hpp"
#include "render.hpp"

namespace qpflow::cli {

extern char const* const kBuiltinFixtures;

namespace {

std::string outcome_text(Outcome<UnimodularMatrix> const& o) {
  if (auto const* u = std::get_if<UnimodularMatrix>(&o)) return matrix_text(u->matrix());
  return excluded_text(std::get<Excluded>(o));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

class Recorder {
 public:
  Recorder(std::string name, std::string title) : group_{std::move(name), std::move(title), {}} {}

  void text(std::string key, std::string value) {
    group_.observations.push_back({std::move(key), std::move(value), std::nullopt});
  }
  void element(std::string key, std::string field, FieldElement const& x) {
    group_.observations.push_back({std::move(key), to_string(x), std::move(field)});
  }
  ExampleGroup take() { return std::move(group_); }

 private:
  ExampleGroup group_;
};

IntMatrix matrix_of(std::vector<std::vector<long>> const& rows) {
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool is_unimodular(IntMatrix const& m) { return abs(integer_det(m)) == 1; }

ExampleGroup sqrt5_scaled(Workspace const& ws) {
  Recorder r("sqrt5-scaled", "flow (sqrt2, sqrt10) in the coordinates (1, sqrt5)");
  Flow const& flow = ws.flow("example1");
  r.text("candidate_matrix", outcome_text(multiplier_matrix(flow, ws.candidate("unit5"))));
  MultiplierReport report = multiplier_group(flow);
  r.element("generator", "Q5", *report.generator);
  r.text("index", std::to_string(*report.index));
  r.element("fundamental_unit", "Q5", report.ambient_unit_group->fundamental_unit);
  r.text("cube_identity", bool_text(pow(ws.candidate("phi"), 3) == ws.candidate("unit5")));
  r.text("scale_label", flow.scale_label().value_or(""));
  return r.take();
}

ExampleGroup silver_family(Workspace const& ws) {
  Recorder r("silver-family", "flow (1, 1 + sqrt2) and its two-parameter symmetry family");
  Flow const& flow = ws.flow("silver");
  NumberField const& f = flow.field();
  FieldElement silver = ws.candidate("silver");
  auto family = [](long u1, long u2) { return matrix_of({{-2 * u1 + u2, u1}, {u1, u2}}); };
  auto formula = [&](long u1, long u2) {
    return f.from_rational(Rational(-2 * u1 + u2)) + Rational(u1) * silver;
  };
  r.text("family_matrix_u1=1_u2=2", matrix_text(family(1, 2)));
  auto alpha12 = multiplier_of_matrix(flow, family(1, 2));
  if (auto const* a = std::get_if<FieldElement>(&alpha12)) {
    r.element("family_multiplier_u1=1_u2=2", "Q2", *a);
  } else {
    r.text("family_multiplier_u1=1_u2=2", excluded_text(std::get<Excluded>(alpha12)));
  }
  auto cand = multiplier_matrix(flow, silver);
  r.text("candidate_matrix", outcome_text(cand));
  if (auto const* u = std::get_if<UnimodularMatrix>(&cand)) {
    r.text("candidate_det", std::to_string(u->determinant()));
  }
  int members = 0;
  int violations = 0;
  for (long u1 = -5; u1 <= 5; ++u1) {
    for (long u2 = -5; u2 <= 5; ++u2) {
      IntMatrix b = family(u1, u2);
      if (!is_unimodular(b)) continue;
      ++members;
      auto a = multiplier_of_matrix(flow, b);
      auto const* alpha = std::get_if<FieldElement>(&a);
      if (!alpha || !(*alpha == formula(u1, u2))) ++violations;
    }
  }
  r.text("family_unimodular_members", std::to_string(members));
  r.text("family_violations", std::to_string(violations));
  return r.take();
}

ExampleGroup cubic_family(Workspace const& ws) {
  Recorder r("cubic-family", "flow (b^2, b, 1) on T^3 and its three-parameter family");
  Flow const& flow = ws.flow("cubic");
  NumberField const& f = flow.field();
  FieldElement b = f.generator();
  auto family = [](long u1, long u2, long u3) {
    return matrix_of({{u1 + u2 + u3, u1, u1 + u2}, {u1 + u2, u3, u1}, {u1, u2, u3}});
  };
  r.text("min_poly", to_string(f.min_poly()));
  IntMatrix b111 = family(1, 1, 1);
  r.text("family_matrix_u=1,1,1", matrix_text(b111));
  r.text("family_det_u=1,1,1", to_string(integer_det(b111)));
  auto alpha = multiplier_of_matrix(flow, b111);
  if (auto const* a = std::get_if<FieldElement>(&alpha)) {
    r.element("family_multiplier_u=1,1,1", "Qbeta", *a);
  } else {
    r.text("family_multiplier_u=1,1,1", excluded_text(std::get<Excluded>(alpha)));
  }
  r.text("candidate_matrix", outcome_text(multiplier_matrix(flow, ws.candidate("beta_unit"))));
  int members = 0;
  int violations = 0;
  for (long u1 = -3; u1 <= 3; ++u1) {
    for (long u2 = -3; u2 <= 3; ++u2) {
      for (long u3 = -3; u3 <= 3; ++u3) {
        IntMatrix m = family(u1, u2, u3);
        if (!is_unimodular(m)) continue;
        ++members;
        FieldElement expected = Rational(u1) * b * b + Rational(u2) * b + f.from_rational(u3);
        auto a = multiplier_of_matrix(flow, m);
        auto const* got = std::get_if<FieldElement>(&a);
        if (!got || !(*got == expected)) ++violations;
      }
    }
  }
  r.text("family_unimodular_members", std::to_string(members));
  r.text("family_violations", std::to_string(violations));
  return r.take();
}

ExampleGroup sqrt5_exclusion(Workspace const& ws) {
  Recorder r("sqrt5-exclusion", "flow (1, sqrt5): the golden ratio is not a multiplier");
  Flow const& flow = ws.flow("example1");
  Classification c = classify_flow(flow);
  r.text("classification", to_string(c.kind));
  r.text("field", c.field ? to_string(c.field->min_poly()) : "none");
  r.text("phi_min_poly", to_string(minimal_polynomial(ws.candidate("phi"))));
  r.text("phi_candidate", outcome_text(multiplier_matrix(flow, ws.candidate("phi"))));
  r.text("conjugate_to_2_sqrt5", outcome_text(conjugacy_matrix(flow, ws.flow("scaled5"))));
  return r.take();
}

ExampleGroup biquadratic(Workspace const& ws) {
  Recorder r("biquadratic", "flow (sqrt6, sqrt3, sqrt2, 1) in Q(sqrt2 + sqrt3)");
  Flow const& flow = ws.flow("biquadratic");
  FieldElement alpha = ws.candidate("alpha");
  FieldElement half = ws.candidate("half26");
  r.element("alpha", "Q23", alpha);
  auto b = multiplier_matrix(flow, alpha);
  r.text("alpha_matrix", outcome_text(b));
  if (auto const* u = std::get_if<UnimodularMatrix>(&b)) {
    r.text("alpha_abs_det", std::to_string(std::abs(u->determinant())));
  }
  r.text("alpha_is_unit", bool_text(is_unit(alpha)));
  r.text("half_candidate", outcome_text(multiplier_matrix(flow, half)));
  r.text("half_min_poly", to_string(minimal_polynomial(half)));
  r.text("half_is_unit", bool_text(is_unit(half)));
  r.text("classification", to_string(classify_flow(flow).kind));
  return r.take();
}

ExampleGroup sqrt2_conjugacy(Workspace const& ws) {
  Recorder r("sqrt2-conjugacy", "flows (1, sqrt2) and (1, 1 + sqrt2) are conjugate");
  NumberField const& f = ws.field("Q2");
  r.element("fundamental_unit", "Q2", fundamental_unit_of(f));
  MultiplierReport sq = multiplier_group(ws.flow("sqrt2"));
  r.element("sqrt2_generator", "Q2", *sq.generator);
  r.text("sqrt2_index", std::to_string(*sq.index));
  MultiplierReport si = multiplier_group(ws.flow("silver"));
  r.element("silver_generator", "Q2", *si.generator);
  r.text("silver_index", std::to_string(*si.index));
  r.text("silver_min_poly", to_string(minimal_polynomial(ws.candidate("silver"))));
  r.text("conjugacy_matrix", outcome_text(conjugacy_matrix(ws.flow("silver"), ws.flow("sqrt2"))));
  std::vector<FieldElement> b1{f.one(), f.generator()};
  std::vector<FieldElement> b2{f.one(), ws.candidate("silver")};
  r.text("basis_1_sqrt2", to_string(verify_integral_basis(f, b1).kind));
  r.text("basis_1_silver", to_string(verify_integral_basis(f, b2).kind));
  return r.take();
}

ExampleGroup golden_basis(Workspace const& ws) {
  Recorder r("golden-basis", "flow (1, (1 + sqrt5)/2) has the full unit group");
  NumberField const& f = ws.field("Q5");
  r.element("fundamental_unit", "Q5", fundamental_unit_of(f));
  std::ostringstream basis;
  std::vector<FieldElement> ib = quadratic_integral_basis(5);
  for (std::size_t i = 0; i < ib.size(); ++i) basis << (i ? ", " : "") << to_string(ib[i]);
  r.text("integral_basis", basis.str());
  MultiplierReport rep = multiplier_group(ws.flow("golden"));
  r.element("golden_generator", "Q5", *rep.generator);
  r.text("golden_index", std::to_string(*rep.index));
  r.text("golden_basis",
         to_string(verify_integral_basis(f, ws.flow("golden").components()).kind));
  return r.take();
}

ExampleGroup biquadratic_basis(Workspace const& ws) {
  Recorder r("biquadratic-integral-basis", "integral basis {1, sqrt3, sqrt6, (sqrt2 + sqrt6)/2}");
  NumberField const& f = ws.field("Q23");
  std::vector<FieldElement> basis{f.one(), ws.candidate("s3"), ws.candidate("s6"),
                                  ws.candidate("half26")};
  r.text("basis_verdict", to_string(verify_integral_basis(f, basis).kind));
  r.text("min_poly", to_string(f.min_poly()));
  int real_roots = count_real_roots(f.min_poly());
  r.text("real_roots", std::to_string(real_roots));
  r.text("unit_rank", std::to_string(real_roots - 1));
  Flow const& flow = ws.flow("integral4");
  MultiplierReport rep = multiplier_group(flow, {ws.candidate("alpha"), ws.candidate("half26")});
  r.text("report_kind", to_string(rep.kind));
  auto member = [&](FieldElement const& x) {
    for (auto const& s : rep.verified_members) {
      if (s.multiplier == x) return true;
    }
    return false;
  };
  r.text("alpha_member", bool_text(member(ws.candidate("alpha"))));
  r.text("half_member", bool_text(member(ws.candidate("half26"))));
  return r.take();
}

bool same(Observation const& o, std::string const& expected, Workspace const& ws) {
  if (!o.field) return o.actual == expected;
  try {
    NumberField const& f = ws.field(*o.field);
    return ws.element(f, expected) == ws.element(f, o.actual);
  } catch (std::exception const&) {
    return false;
  }
}

}  // namespace

std::vector<ExampleGroup> run_examples(Workspace const& ws) {
  using Runner = ExampleGroup (*)(Workspace const&);
  Runner const runners[] = {sqrt5_scaled,   silver_family,   cubic_family, sqrt5_exclusion,
                            biquadratic,    sqrt2_conjugacy, golden_basis, biquadratic_basis};
  std::vector<ExampleGroup> out;
  for (Runner run : runners) out.push_back(run(ws));
  return out;
}

Json builtin_fixtures() { return Json::parse(kBuiltinFixtures); }

int report_examples(std::vector<ExampleGroup> const& groups, Json const& fixtures,
                    Workspace const& ws, std::ostream& out, bool json) {
  int failed = 0;
  Json doc{{"groups", Json::array()}};
  std::ostringstream diffs;
  std::ostringstream table;
  for (auto const& g : groups) {
    Json expected = fixtures.contains(g.name) ? fixtures.at(g.name) : Json::object();
    Json checks = Json::array();
    bool pass = fixtures.contains(g.name);
    if (!pass) diffs << g.name << ": no fixture for this example\n";
    for (auto const& o : g.observations) {
      std::optional<std::string> want;
      if (expected.contains(o.key) && expected.at(o.key).is_string()) {
        want = expected.at(o.key).get<std::string>();
      }
      bool ok = want && same(o, *want, ws);
      if (!ok) {
        pass = false;
        diffs << g.name << ": " << o.key << "\n"
              << "  - expected: " << want.value_or("<missing>") << "\n"
              << "  + actual:   " << o.actual << "\n";
      }
      checks.push_back(Json{{"key", o.key},
                            {"expected", want ? Json(*want) : Json(nullptr)},
                            {"actual", o.actual},
                            {"pass", ok}});
    }
    if (!pass) ++failed;
    std::string name = g.name;
    name.resize(std::max<std::size_t>(name.size(), 28), ' ');
    table << "  " << (pass ? "PASS" : "FAIL") << "  " << name << g.observations.size()
          << " checks  " << g.title << "\n";
    doc["groups"].push_back(
        Json{{"name", g.name}, {"title", g.title}, {"pass", pass}, {"checks", std::move(checks)}});
  }
  std::size_t passed = groups.size() - static_cast<std::size_t>(failed);
  if (json) {
    doc["passed"] = passed;
    doc["total"] = groups.size();
    out << doc.dump(2) << "\n";
  } else {
    out << "worked examples\n" << table.str();
    if (failed) out << "\ndiff\n" << diffs.str();
    out << passed << "/" << groups.size() << " example groups pass\n";
  }
  return failed;
}

}  // namespace qpflow::cli
