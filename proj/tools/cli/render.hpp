#pragma once

#include <string>

#include "qpflow/classify.hpp"
#include "qpflow/symmetry.hpp"
#include "workspace.hpp"

namespace qpflow::cli {

inline constexpr int kReportDigits = 30;

std::string matrix_text(IntMatrix const& m);
// Exact rendering followed by a 30-digit decimal in parentheses.
std::string element_text(FieldElement const& x);
std::string field_text(NumberField const& f);
std::string excluded_text(Excluded const& e);

Json integer_json(Integer const& n);
Json rational_json(Rational const& q);
Json matrix_json(IntMatrix const& m);
Json poly_json(IntPoly const& p);
Json rat_poly_json(RatPoly const& p);
Json coords_json(FieldElement const& x);
Json element_json(FieldElement const& x);
Json field_json(NumberField const& f);
Json flow_json(Flow const& flow);
Json lattice_json(FieldLattice const& lattice);
Json excluded_json(Excluded const& e);
Json solution_json(SymmetrySolution const& s);
Json report_json(MultiplierReport const& r);
Json verdict_json(ProbeVerdict const& v);
Json classification_json(Classification const& c);

}  // namespace qpflow::cli
