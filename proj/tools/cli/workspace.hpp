#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpflow/flow.hpp"

namespace qpflow::cli {

using Json = nlohmann::ordered_json;

// Named fields, candidate elements and flows read from one JSON document:
//
//   { "fields":     { "Q5": { "min_poly": [-5, 0, 1], "root_index": 1 } },
//     "candidates": { "phi": { "field": "Q5", "value": "(1 + g)/2" } },
//     "flows":      { "golden": { "field": "Q5", "components": ["1", "phi"] },
//                     "pi": { "numeric": ["1", "3.14159..."] } } }
//
// Elements are coordinate arrays over the power basis or expression strings.
// Fields may also be given inline where a name is expected.  Candidates are
// resolved lazily, so they may refer to each other in any order.
class Workspace {
 public:
  static Workspace from_json(Json const& doc);
  static Workspace from_file(std::string const& path);
  // The workspace with the worked examples shipped with the tool.
  static Workspace builtin();

  NumberField const& field(std::string const& name) const;
  FieldElement candidate(std::string const& name) const;
  Flow const& flow(std::string const& name) const;

  std::vector<std::string> field_names() const;
  std::vector<std::string> flow_names() const;
  std::vector<std::string> candidate_names() const;

  // Parses an element of `field`; identifiers resolve to candidates.
  FieldElement element(NumberField const& field, Json const& value) const;
  FieldElement element(NumberField const& field, std::string const& text) const;

  NumberField field_ref(Json const& ref) const;

 private:
  std::map<std::string, NumberField> fields_;
  std::vector<std::string> field_order_;
  std::map<std::string, Json> candidate_defs_;
  std::vector<std::string> candidate_order_;
  mutable std::map<std::string, FieldElement> candidates_;
  mutable std::set<std::string> resolving_;
  std::map<std::string, Flow> flows_;
  std::vector<std::string> flow_order_;
};

NumberField field_from_json(Json const& j);
Rational rational_from_json(Json const& j);

}  // namespace qpflow::cli
