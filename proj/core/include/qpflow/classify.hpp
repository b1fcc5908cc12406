#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpflow/flow.hpp"
#include "qpflow/probe.hpp"

namespace qpflow {

enum class FlowClass { algebraic, transcendental_by_definition, numeric_undetermined };

std::string to_string(FlowClass kind);

struct Classification {
  FlowClass kind = FlowClass::algebraic;
  // algebraic: the field F spanned by a_i / a_1, as its own number field,
  // and the element of the ambient field that generates it.
  std::optional<NumberField> field;
  std::optional<FieldElement> primitive_element;
  std::string detail;
  // numeric_undetermined: the probe runs behind the verdict.
  std::vector<ProbeVerdict> evidence;
};

// An exact flow is algebraic iff W = (1/a_1) span_Q(a_i) is closed under
// multiplication; W is then the field F with scale 1/a_1.  Numeric flows are
// handed to the probe and only evidence is reported.
Classification classify_flow(Flow const& flow);

}  // namespace qpflow
