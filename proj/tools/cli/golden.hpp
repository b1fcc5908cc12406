#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "workspace.hpp"

namespace qpflow::cli {

// One computed quantity of a worked example.  Elements are compared by value:
// the expected text is parsed in `field`, so "(1 + g)/2" and "1/2 + 1/2*g"
// agree.
struct Observation {
  std::string key;
  std::string actual;
  std::optional<std::string> field;
};

struct ExampleGroup {
  std::string name;
  std::string title;
  std::vector<Observation> observations;
};

// Recomputes every worked example from the flows of `ws` (the built-in
// workspace or one with the same names).
std::vector<ExampleGroup> run_examples(Workspace const& ws);

// Expected values shipped with the tool.
Json builtin_fixtures();

// Compares observations with fixtures, prints a pass/fail table (or JSON) and
// a diff for every mismatch.  Returns the number of failing groups.
int report_examples(std::vector<ExampleGroup> const& groups, Json const& fixtures,
                    Workspace const& ws, std::ostream& out, bool json);

}  // namespace qpflow::cli
