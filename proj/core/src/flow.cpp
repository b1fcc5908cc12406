#include "qpflow/flow.hpp"

namespace qpflow {

std::size_t Flow::dimension() const {
  return is_exact() ? components_.size() : numeric_.size();
}

NumberField const& Flow::field() const {
  if (!field_) throw InvalidArgument("numeric flow has no number field");
  return *field_;
}

Flow make_flow(NumberField const& field, std::vector<FieldElement> components,
               std::optional<std::string> scale_label) {
  if (components.size() < 2) throw InvalidArgument("a flow on T^n needs n >= 2 components");
  std::size_t const n = static_cast<std::size_t>(field.degree());
  RatMatrix coords(components.size(), n);
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!(components[i].field() == field)) throw FieldMismatch();
    for (std::size_t j = 0; j < n; ++j) coords(i, j) = components[i].coord(j);
  }
  if (rank(coords) != components.size()) {
    throw InvalidArgument("components are rationally dependent: the flow is not quasiperiodic");
  }
  Flow f;
  f.field_ = field;
  f.components_ = std::move(components);
  f.scale_label_ = std::move(scale_label);
  return f;
}

Flow make_numeric_flow(std::vector<std::string> decimals, std::optional<std::string> scale_label) {
  if (decimals.size() < 2) throw InvalidArgument("a flow on T^n needs n >= 2 components");
  Flow f;
  for (auto const& d : decimals) f.numeric_values_.push_back(parse_decimal(d));
  if (f.numeric_values_.front().value == 0) {
    throw InvalidArgument("first component of a numeric flow must be nonzero");
  }
  f.numeric_ = std::move(decimals);
  f.scale_label_ = std::move(scale_label);
  return f;
}

std::vector<Rational> advance(Flow const& flow, Rational const& t, std::span<Rational const> point,
                              int precision) {
  if (precision <= 0) throw InvalidArgument("precision must be positive");
  if (point.size() != flow.dimension()) throw InvalidArgument("point has the wrong dimension");
  Integer const scale = pow10(static_cast<unsigned>(precision));
  // Slack of 10^-(precision+3) in t * a_i before the final rounding.
  Rational width = make_rational(1, scale * 1000);
  if (abs(t) > 1) width /= abs(t);
  std::vector<Rational> out;
  out.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    Rational a;
    if (flow.is_exact()) {
      a = enclose(flow.components()[i], width).midpoint();
    } else {
      a = flow.numeric_values()[i].value;
    }
    Rational const v = point[i] + t * a;
    Rational frac = v - Rational(floor(v));
    Integer rounded = round_nearest(frac * scale);
    if (rounded == scale) rounded = 0;
    out.push_back(make_rational(rounded, scale));
  }
  return out;
}

}  // namespace qpflow
