#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qpflow/number_field.hpp"

namespace qpflow::cli {

// Malformed input or a name that does not resolve; the CLI exits with 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolves identifiers other than the generator symbol.
using NameResolver = std::function<FieldElement(std::string const&)>;

// Parses an element of `field` written over the generator symbol "g":
// integers, decimals, + - * / ^ (integer exponents), parentheses and
// implicit multiplication, e.g. "(g^3 - 9g)/2" or "2 s6 + 4 s3 + 5".
// The middle dot and the minus sign U+2212 are accepted as well.
FieldElement parse_element(NumberField const& field, std::string_view text,
                           NameResolver const& resolve = {});

}  // namespace qpflow::cli
