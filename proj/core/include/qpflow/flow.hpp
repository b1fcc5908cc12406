#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpflow/number_field.hpp"

namespace qpflow {

// The linear flow on T^n generated by the constant vector field
// X = sum a_i d/d(theta_i).  Components are either exact elements of one
// number field, or (for probe-only flows such as (1, pi)) decimal strings.
class Flow {
 public:
  std::size_t dimension() const;
  bool is_exact() const { return field_.has_value(); }

  // Exact flows only.
  NumberField const& field() const;
  std::vector<FieldElement> const& components() const { return components_; }

  // Numeric flows only.
  std::vector<std::string> const& numeric_components() const { return numeric_; }
  std::vector<Decimal> const& numeric_values() const { return numeric_values_; }

  // Free-text annotation of the physical scale; never used in computation.
  std::optional<std::string> const& scale_label() const { return scale_label_; }

 private:
  friend Flow make_flow(NumberField const&, std::vector<FieldElement>, std::optional<std::string>);
  friend Flow make_numeric_flow(std::vector<std::string>, std::optional<std::string>);
  Flow() = default;

  std::optional<NumberField> field_;
  std::vector<FieldElement> components_;
  std::vector<std::string> numeric_;
  std::vector<Decimal> numeric_values_;
  std::optional<std::string> scale_label_;
};

// Requires at least two components in `field`, rationally independent (the
// flow is quasiperiodic).  The number of components may be below the field
// degree; such flows are only meaningful for classification and enumeration.
Flow make_flow(NumberField const& field, std::vector<FieldElement> components,
               std::optional<std::string> scale_label = std::nullopt);

// Components given as decimal strings; the first must be nonzero.
Flow make_numeric_flow(std::vector<std::string> decimals,
                       std::optional<std::string> scale_label = std::nullopt);

// theta_i + t a_i mod 1, each coordinate rounded to `precision` fraction
// digits.
std::vector<Rational> advance(Flow const& flow, Rational const& t, std::span<Rational const> point,
                              int precision);

}  // namespace qpflow
