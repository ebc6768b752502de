#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kradical/errors.hpp"
#include "kradical/poly.hpp"

namespace kradical {

struct ParseResult {
  Poly poly;
  // Set when the input cannot run on the exact path: either a coefficient
  // mixed incompatible radicands (downgraded to a numeric enclosure) or
  // distinct coefficients live in different quadratic fields.
  bool numeric_only = false;
  std::vector<std::string> warnings;
};

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ('^' uint)?
//   base     := 'z' | rational | 'sqrt' '(' uint ')' | '(' expr ')'
//   rational := int ('/' uint)?
// Whitespace is ignored; implicit multiplication is not supported; '/'
// between factors requires a constant divisor. Degree must end up >= 1.
ParseResult parse_poly(const std::string& expr, long precision = kPrecisionDefault);

// Common field tag of all coefficients if they are exact and pairwise
// compatible (0 = rational), nullopt otherwise.
std::optional<long> poly_field_d(const Poly& p);

}  // namespace kradical
