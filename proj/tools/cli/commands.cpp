#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "expression.hpp"
#include "golden.hpp"
#include "qpflow/errors.hpp"
#include "qpflow/orders.hpp"
#include "render.hpp"

namespace qpflow::cli {

namespace {

struct Options {
  std::string workspace;
  bool json = false;
  bool strict = false;

  std::string name;
  std::string other;
  std::vector<std::string> candidates;
  std::optional<long> bound;
  std::string matrix;
  std::string time = "1";
  std::string point;
  int precision = 30;

  std::string decimal;
  int degree = ProbeDefaults::max_degree;
  std::string height = ProbeDefaults::height_bound().get_str();
  int probe_precision = ProbeDefaults::precision_digits;
  bool t2 = false;

  std::string fixtures;
};

class Session {
 public:
  Session(Options const& opt, std::ostream& out) : opt_(opt), out_(out) {}

  Workspace const& ws() {
    if (!ws_) ws_ = opt_.workspace.empty() ? Workspace::builtin() : Workspace::from_file(opt_.workspace);
    return *ws_;
  }

  int negative(bool is_negative) const { return opt_.strict && is_negative ? kNegative : kSuccess; }

  void emit(Json const& j) { out_ << j.dump(2) << "\n"; }

  int field_info();
  int flow_multipliers();
  int flow_check_matrix();
  int flow_conjugate();
  int flow_classify();
  int flow_advance();
  int probe_minpoly();
  int examples_paper();

 private:
  void flow_header(std::string const& name, Flow const& flow);

  Options const& opt_;
  std::ostream& out_;
  std::optional<Workspace> ws_;
};

IntMatrix parse_matrix(std::string const& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (nlohmann::json::exception const&) {
    throw UsageError("matrix must be a JSON array of rows, e.g. [[2,1],[5,2]]");
  }
  if (!j.is_array() || j.empty()) throw UsageError("matrix must be a non-empty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (auto const& row : j) {
    if (!row.is_array()) throw UsageError("matrix rows must be arrays");
    std::vector<Integer> r;
    for (auto const& e : row) {
      Rational q = rational_from_json(e);
      if (q.get_den() != 1) throw UsageError("matrix entries must be integers");
      r.push_back(q.get_num());
    }
    rows.push_back(std::move(r));
  }
  try {
    return IntMatrix::from_rows(rows);
  } catch (Error const& e) {
    throw UsageError(e.what());
  }
}

std::string join_elements(std::vector<FieldElement> const& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? ", " : "") << to_string(xs[i]);
  return s.str();
}

void Session::flow_header(std::string const& name, Flow const& flow) {
  out_ << "flow " << name << " on T^" << flow.dimension();
  if (flow.is_exact()) {
    out_ << ": " << field_text(flow.field()) << "\n";
    out_ << "  components: " << join_elements(flow.components()) << "\n";
  } else {
    out_ << ": numeric\n  components:";
    for (auto const& c : flow.numeric_components()) out_ << " " << c;
    out_ << "\n";
  }
  if (flow.scale_label()) out_ << "  scale label: " << *flow.scale_label() << "\n";
}

int Session::field_info() {
  NumberField const& f = ws().field(opt_.name);
  std::vector<FieldElement> power;
  for (int k = 0; k < f.degree(); ++k) power.push_back(pow(f.generator(), k));
  Interval const& root = f.root_interval();
  Rational disc = discriminant(power);
  Json j{{"name", opt_.name},
         {"field", field_json(f)},
         {"degree", f.degree()},
         {"root_interval", Json::array({rational_json(root.lo), rational_json(root.hi)})},
         {"generator", to_decimal(f.generator(), kReportDigits)},
         {"power_basis_discriminant", rational_json(disc)}};
  std::ostringstream text;
  text << "field " << opt_.name << ": " << field_text(f) << "\n"
       << "  degree: " << f.degree() << "\n"
       << "  min_poly: " << to_string(f.min_poly()) << "\n"
       << "  root interval: [" << to_string(root.lo) << ", " << to_string(root.hi)
       << "], g = " << to_decimal(f.generator(), kReportDigits) << "\n"
       << "  power basis discriminant: " << to_string(disc) << "\n";
  if (f.degree() == 2) {
    QuadraticPresentation p = quadratic_presentation(f);
    FieldElement eps = fundamental_unit_of(f);
    std::vector<FieldElement> basis = quadratic_maximal_order(f).basis();
    j["sqrt_d"] = Json{{"d", p.d}, {"value", element_json(p.sqrt_d)}};
    j["fundamental_unit"] = element_json(eps);
    Json ib = Json::array();
    for (auto const& b : basis) ib.push_back(element_json(b));
    j["integral_basis"] = std::move(ib);
    text << "  sqrt(" << p.d << ") = " << to_string(p.sqrt_d) << "\n"
         << "  fundamental unit: " << element_text(eps) << "\n"
         << "  integral basis: " << join_elements(basis) << "\n";
  }
  if (opt_.json) {
    emit(j);
  } else {
    out_ << text.str();
  }
  return kSuccess;
}

int Session::flow_multipliers() {
  Flow const& flow = ws().flow(opt_.name);
  std::vector<std::pair<std::string, FieldElement>> cands;
  for (auto const& c : opt_.candidates) {
    if (!flow.is_exact()) throw UsageError("candidates need a flow with exact components");
    cands.emplace_back(c, ws().element(flow.field(), c));
  }
  std::vector<FieldElement> cand_values;
  for (auto const& c : cands) cand_values.push_back(c.second);
  MultiplierReport report = multiplier_group(flow, cand_values);

  Json jc = Json::array();
  std::ostringstream tc;
  bool any_excluded = false;
  for (auto const& [text, x] : cands) {
    auto b = multiplier_matrix(flow, x);
    Json entry{{"input", text}, {"element", element_json(x)}};
    tc << "  candidate " << text << " = " << element_text(x) << ": ";
    if (auto const* u = std::get_if<UnimodularMatrix>(&b)) {
      entry["matrix"] = matrix_json(u->matrix());
      entry["det"] = u->determinant();
      tc << "B = " << matrix_text(u->matrix()) << "\n";
    } else {
      any_excluded = true;
      Excluded const& e = std::get<Excluded>(b);
      entry["excluded"] = excluded_json(e);
      tc << "excluded: " << excluded_text(e) << "\n";
    }
    jc.push_back(std::move(entry));
  }

  std::optional<std::vector<SymmetrySolution>> enumerated;
  if (opt_.bound) {
    if (!flow.is_exact()) throw UsageError("enumeration needs a flow with exact components");
    enumerated = enumerate_multipliers_bounded(flow, *opt_.bound);
  }

  if (opt_.json) {
    Json j{{"flow", opt_.name}, {"definition", flow_json(flow)}, {"report", report_json(report)}};
    j["candidates"] = std::move(jc);
    if (enumerated) {
      Json sols = Json::array();
      for (auto const& s : *enumerated) sols.push_back(solution_json(s));
      j["enumeration"] = Json{{"bound", *opt_.bound}, {"solutions", std::move(sols)}};
    }
    emit(j);
    return negative(any_excluded);
  }

  flow_header(opt_.name, flow);
  out_ << "  report: " << to_string(report.kind) << "\n";
  if (report.kind == ReportKind::trivial_numeric) {
    out_ << "  multipliers: -1, 1 (" << report.detail << ")\n";
    for (auto const& v : report.evidence) out_ << "  evidence: " << describe(v) << "\n";
  } else {
    if (report.generator) {
      out_ << "  generator " << to_string(*report.generator) << ", index " << *report.index
           << " in o*_F\n";
      out_ << "  generator value: " << to_decimal(*report.generator, kReportDigits) << "\n";
    }
    if (report.ambient_unit_group) {
      out_ << "  fundamental unit of o_F: " << element_text(report.ambient_unit_group->fundamental_unit)
           << "\n";
    }
    if (report.order) out_ << "  coefficient order: {" << join_elements(report.order->basis()) << "}\n";
    out_ << "  " << report.detail << "\n";
    out_ << "  verified multipliers:\n";
    for (auto const& s : report.verified_members) {
      out_ << "    " << element_text(s.multiplier) << "  B = " << matrix_text(s.matrix.matrix())
           << "\n";
    }
  }
  out_ << tc.str();
  if (enumerated) {
    out_ << "  enumeration with entries in [-" << *opt_.bound << ", " << *opt_.bound
         << "]: " << enumerated->size() << " solutions\n";
    for (auto const& s : *enumerated) {
      out_ << "    " << element_text(s.multiplier) << "  B = " << matrix_text(s.matrix.matrix())
           << "\n";
    }
  }
  return negative(any_excluded);
}

int Session::flow_check_matrix() {
  Flow const& flow = ws().flow(opt_.name);
  IntMatrix b = parse_matrix(opt_.matrix);
  if (!flow.is_exact()) throw UsageError("check-matrix needs a flow with exact components");
  if (b.rows() != flow.dimension() || b.cols() != flow.dimension()) {
    throw UsageError("matrix must be " + std::to_string(flow.dimension()) + "x" +
                     std::to_string(flow.dimension()));
  }
  auto a = multiplier_of_matrix(flow, b);
  auto const* alpha = std::get_if<FieldElement>(&a);
  if (opt_.json) {
    Json j{{"flow", opt_.name}, {"matrix", matrix_json(b)}};
    if (alpha) {
      j["multiplier"] = element_json(*alpha);
    } else {
      j["excluded"] = excluded_json(std::get<Excluded>(a));
    }
    emit(j);
  } else {
    out_ << "flow " << opt_.name << ", B = " << matrix_text(b) << "\n";
    if (alpha) {
      out_ << "  multiplier: " << element_text(*alpha) << "\n";
    } else {
      out_ << "  not a symmetry: " << excluded_text(std::get<Excluded>(a)) << "\n";
    }
  }
  return negative(alpha == nullptr);
}

int Session::flow_conjugate() {
  Flow const& f1 = ws().flow(opt_.name);
  Flow const& f2 = ws().flow(opt_.other);
  auto b = conjugacy_matrix(f1, f2);
  auto const* u = std::get_if<UnimodularMatrix>(&b);
  if (opt_.json) {
    Json j{{"from", opt_.name}, {"to", opt_.other}};
    if (u) {
      j["matrix"] = matrix_json(u->matrix());
      j["det"] = u->determinant();
    } else {
      j["excluded"] = excluded_json(std::get<Excluded>(b));
    }
    emit(j);
  } else {
    out_ << "conjugacy " << opt_.name << " -> " << opt_.other << "\n";
    if (u) {
      out_ << "  B = " << matrix_text(u->matrix()) << ", det " << u->determinant() << "\n";
    } else {
      out_ << "  no unimodular conjugacy: " << excluded_text(std::get<Excluded>(b)) << "\n";
    }
  }
  return negative(u == nullptr);
}

int Session::flow_classify() {
  Flow const& flow = ws().flow(opt_.name);
  Classification c = classify_flow(flow);
  if (opt_.json) {
    Json j{{"flow", opt_.name}, {"classification", classification_json(c)}};
    emit(j);
  } else {
    flow_header(opt_.name, flow);
    out_ << "  class: " << to_string(c.kind) << "\n";
    if (c.field) out_ << "  F: " << field_text(*c.field) << "\n";
    if (c.primitive_element && flow.is_exact()) {
      out_ << "  F generated by " << element_text(*c.primitive_element) << "\n";
    }
    out_ << "  " << c.detail << "\n";
    for (auto const& v : c.evidence) out_ << "  evidence: " << describe(v) << "\n";
  }
  return negative(c.kind == FlowClass::transcendental_by_definition);
}

int Session::flow_advance() {
  Flow const& flow = ws().flow(opt_.name);
  if (opt_.precision <= 0) throw UsageError("precision must be positive");
  Rational t;
  try {
    t = opt_.time.find('/') != std::string::npos ? parse_rational(opt_.time)
                                                  : parse_decimal(opt_.time).value;
  } catch (std::exception const&) {
    throw UsageError("malformed time \"" + opt_.time + "\"");
  }
  std::vector<Rational> point;
  if (opt_.point.empty()) {
    point.assign(flow.dimension(), Rational(0));
  } else {
    std::stringstream ss(opt_.point);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        point.push_back(parse_decimal(item).value);
      } catch (std::exception const&) {
        throw UsageError("malformed point coordinate \"" + item + "\"");
      }
    }
  }
  if (point.size() != flow.dimension()) {
    throw UsageError("point needs " + std::to_string(flow.dimension()) + " coordinates");
  }
  std::vector<Rational> p = advance(flow, t, point, opt_.precision);
  if (opt_.json) {
    Json coords = Json::array();
    for (auto const& x : p) coords.push_back(to_decimal(x, opt_.precision));
    emit(Json{{"flow", opt_.name}, {"t", to_string(t)}, {"point", std::move(coords)}});
  } else {
    out_ << "flow " << opt_.name << ", t = " << to_string(t) << ":";
    for (auto const& x : p) out_ << " " << to_decimal(x, opt_.precision);
    out_ << "\n";
  }
  return kSuccess;
}

int Session::probe_minpoly() {
  Integer height;
  try {
    height = parse_integer(opt_.height);
  } catch (std::exception const&) {
    throw UsageError("malformed height bound \"" + opt_.height + "\"");
  }
  ProbeVerdict v = opt_.t2 ? t2_symmetry_probe(opt_.decimal, opt_.probe_precision, height)
                           : minpoly_from_decimal(opt_.decimal, opt_.degree, height,
                                                  opt_.probe_precision);
  if (opt_.json) {
    emit(verdict_json(v));
  } else {
    out_ << describe(v) << "\n";
  }
  return negative(v.kind == ProbeKind::no_relation);
}

int Session::examples_paper() {
  Json fixtures;
  if (opt_.fixtures.empty()) {
    fixtures = builtin_fixtures();
  } else {
    std::ifstream in(opt_.fixtures);
    if (!in) throw UsageError("cannot read fixtures " + opt_.fixtures);
    try {
      fixtures = Json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw UsageError("fixtures " + opt_.fixtures + ": " + e.what());
    }
  }
  Workspace const builtin = Workspace::builtin();
  int failed = report_examples(run_examples(builtin), fixtures, builtin, out_, opt_.json);
  return failed == 0 ? kSuccess : kNegative;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Generalized symmetries and multiplier groups of linear flows on tori", "qpflow"};
  app.require_subcommand(1);
  app.add_option("--workspace", opt.workspace, "JSON workspace (default: built-in examples)");
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--strict", opt.strict, "Exit 1 on a mathematical negative");

  auto* field = app.add_subcommand("field", "Number fields")->require_subcommand(1);
  auto* field_info = field->add_subcommand("info", "Degree, root, discriminant, units");
  field_info->add_option("name", opt.name, "Field name")->required();

  auto* flow = app.add_subcommand("flow", "Linear flows")->require_subcommand(1);
  auto* mult = flow->add_subcommand("multipliers", "Multiplier group report");
  mult->add_option("flow", opt.name, "Flow name")->required();
  mult->add_option("--bound", opt.bound, "Append brute-force enumeration with |b_ij| <= bound");
  mult->add_option("--candidate", opt.candidates, "Candidate multiplier (expression over g)");
  auto* check = flow->add_subcommand("check-matrix", "Multiplier of an integer matrix");
  check->add_option("flow", opt.name, "Flow name")->required();
  check->add_option("matrix", opt.matrix, "Matrix as JSON, e.g. [[2,1],[5,2]]")->required();
  auto* conj = flow->add_subcommand("conjugate", "Unimodular conjugacy between two flows");
  conj->add_option("from", opt.name, "Flow name")->required();
  conj->add_option("to", opt.other, "Flow name")->required();
  auto* classify = flow->add_subcommand("classify", "Algebraic or transcendental");
  classify->add_option("flow", opt.name, "Flow name")->required();
  auto* adv = flow->add_subcommand("advance", "Evolve a point along the flow");
  adv->add_option("flow", opt.name, "Flow name")->required();
  adv->add_option("--time", opt.time, "Time, decimal or p/q");
  adv->add_option("--point", opt.point, "Comma-separated start point (default origin)");
  adv->add_option("--precision", opt.precision, "Fraction digits");

  auto* probe = app.add_subcommand("probe", "Numeric relation search")->require_subcommand(1);
  auto* mp = probe->add_subcommand("minpoly", "Integer polynomial annihilating a decimal");
  mp->add_option("decimal", opt.decimal, "Decimal string")->required();
  mp->add_option("--degree", opt.degree, "Maximal degree");
  mp->add_option("--height", opt.height, "Maximal coefficient size");
  mp->add_option("--precision", opt.probe_precision, "Working precision in digits");
  mp->add_flag("--t2", opt.t2, "Symmetry probe for the flow (1, x) on T^2");

  auto* examples = app.add_subcommand("examples", "Worked examples")->require_subcommand(1);
  auto* paper = examples->add_subcommand("paper", "Recompute every worked example");
  paper->add_option("--fixtures", opt.fixtures, "Expected values (default: built-in)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Session s(opt, out);
  try {
    if (*field_info) return s.field_info();
    if (*mult) return s.flow_multipliers();
    if (*check) return s.flow_check_matrix();
    if (*conj) return s.flow_conjugate();
    if (*classify) return s.flow_classify();
    if (*adv) return s.flow_advance();
    if (*mp) return s.probe_minpoly();
    if (*paper) return s.examples_paper();
  } catch (UsageError const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qpflow::cli
