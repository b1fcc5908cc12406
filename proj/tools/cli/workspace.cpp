#include "workspace.hpp"

#include <fstream>
#include <sstream>

#include "expression.hpp"
#include "qpflow/errors.hpp"

namespace qpflow::cli {

extern char const* const kBuiltinWorkspace;


namespace {

Integer integer_from_json(Json const& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (std::exception const&) {
    }
  }
  throw UsageError("expected an integer, got " + j.dump());
}

Json const& member(Json const& obj, char const* key, std::string const& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw UsageError(where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

}  // namespace

Rational rational_from_json(Json const& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (std::exception const&) {
    }
  }
  throw UsageError("expected an exact rational such as 3 or \"-1/2\", got " + j.dump());
}

NumberField field_from_json(Json const& j) {
  Json const& mp = member(j, "min_poly", "field");
  if (!mp.is_array()) throw UsageError("field: \"min_poly\" must be an array of integers");
  std::vector<Integer> coeffs;
  for (auto const& c : mp) coeffs.push_back(integer_from_json(c));
  Json const& root = member(j, "root_index", "field");
  if (!root.is_number_integer()) throw UsageError("field: \"root_index\" must be an integer");
  try {
    return make_field(IntPoly(coeffs), root.get<int>());
  } catch (Error const& e) {
    throw UsageError(std::string("field: ") + e.what());
  }
}

Workspace Workspace::from_json(Json const& doc) {
  if (!doc.is_object()) throw UsageError("workspace must be a JSON object");
  Workspace ws;
  if (doc.contains("fields")) {
    for (auto const& [name, def] : doc.at("fields").items()) {
      try {
        ws.fields_.emplace(name, field_from_json(def));
      } catch (UsageError const& e) {
        throw UsageError("field \"" + name + "\": " + e.what());
      }
      ws.field_order_.push_back(name);
    }
  }
  if (doc.contains("candidates")) {
    for (auto const& [name, def] : doc.at("candidates").items()) {
      if (name == "g") throw UsageError("candidate name \"g\" is reserved for the generator");
      ws.candidate_defs_.emplace(name, def);
      ws.candidate_order_.push_back(name);
    }
  }
  if (doc.contains("flows")) {
    for (auto const& [name, def] : doc.at("flows").items()) {
      std::optional<std::string> label;
      if (def.contains("scale_label")) label = def.at("scale_label").get<std::string>();
      try {
        if (def.contains("numeric")) {
          std::vector<std::string> comps;
          for (auto const& c : def.at("numeric")) comps.push_back(c.get<std::string>());
          ws.flows_.emplace(name, make_numeric_flow(std::move(comps), label));
        } else {
          NumberField f = ws.field_ref(member(def, "field", "flow"));
          std::vector<FieldElement> comps;
          for (auto const& c : member(def, "components", "flow")) comps.push_back(ws.element(f, c));
          ws.flows_.emplace(name, make_flow(f, std::move(comps), label));
        }
      } catch (Error const& e) {
        throw UsageError("flow \"" + name + "\": " + e.what());
      } catch (UsageError const& e) {
        throw UsageError("flow \"" + name + "\": " + e.what());
      } catch (nlohmann::json::exception const& e) {
        throw UsageError("flow \"" + name + "\": " + e.what());
      }
      ws.flow_order_.push_back(name);
    }
  }
  return ws;
}

Workspace Workspace::from_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read workspace " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (nlohmann::json::exception const& e) {
    throw UsageError("workspace " + path + ": " + e.what());
  }
  return from_json(doc);
}

Workspace Workspace::builtin() { return from_json(Json::parse(kBuiltinWorkspace)); }

NumberField const& Workspace::field(std::string const& name) const {
  auto it = fields_.find(name);
  if (it == fields_.end()) throw UsageError("unknown field \"" + name + "\"");
  return it->second;
}

Flow const& Workspace::flow(std::string const& name) const {
  auto it = flows_.find(name);
  if (it == flows_.end()) throw UsageError("unknown flow \"" + name + "\"");
  return it->second;
}

FieldElement Workspace::candidate(std::string const& name) const {
  if (auto it = candidates_.find(name); it != candidates_.end()) return it->second;
  auto def = candidate_defs_.find(name);
  if (def == candidate_defs_.end()) throw UsageError("unknown candidate \"" + name + "\"");
  if (!resolving_.insert(name).second) {
    throw UsageError("candidate \"" + name + "\" is defined in terms of itself");
  }
  try {
    NumberField f = field_ref(member(def->second, "field", "candidate \"" + name + "\""));
    FieldElement x = element(f, member(def->second, "value", "candidate \"" + name + "\""));
    resolving_.erase(name);
    candidates_.emplace(name, x);
    return x;
  } catch (...) {
    resolving_.erase(name);
    throw;
  }
}

NumberField Workspace::field_ref(Json const& ref) const {
  if (ref.is_string()) return field(ref.get<std::string>());
  return field_from_json(ref);
}

FieldElement Workspace::element(NumberField const& field, std::string const& text) const {
  return parse_element(field, text, [this](std::string const& n) { return candidate(n); });
}

FieldElement Workspace::element(NumberField const& field, Json const& value) const {
  if (value.is_string()) return element(field, value.get<std::string>());
  if (value.is_number_integer()) return field.from_rational(rational_from_json(value));
  if (value.is_array()) {
    std::vector<Rational> coords;
    for (auto const& c : value) coords.push_back(rational_from_json(c));
    if (coords.size() != static_cast<std::size_t>(field.degree())) {
      throw UsageError("coordinate array " + value.dump() + " does not match the field degree " +
                       std::to_string(field.degree()));
    }
    return field.element(std::move(coords));
  }
  throw UsageError("expected an element (expression string or coordinate array), got " +
                   value.dump());
}

std::vector<std::string> Workspace::field_names() const { return field_order_; }
std::vector<std::string> Workspace::flow_names() const { return flow_order_; }
std::vector<std::string> Workspace::candidate_names() const { return candidate_order_; }

}  // namespace qpflow::cli
