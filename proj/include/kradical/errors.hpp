#pragma once

#include <stdexcept>
#include <string>

namespace kradical {

// Input text failed to parse; pos is the byte offset of the offending token.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t p, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"),
        pos(p) {}
};

// A certified computation could not separate or certify at the working
// precision. Callers retry at suggested_bits (typically doubled) or give up
// once the 4096-bit ceiling is reached.
struct PrecisionError : std::runtime_error {
  long suggested_bits;
  PrecisionError(long bits, const std::string& msg)
      : std::runtime_error(msg), suggested_bits(bits) {}
};

// Structurally invalid request: zero polynomial, degree-0 input, t = 0 for
// the deg-15 family, incompatible exact fields, out-of-range caps.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Monodromy group matched no row of the classification table; by the
// classification this means the numerics failed, not that a new group exists.
struct UnrecognizedGroupError : std::runtime_error {
  explicit UnrecognizedGroupError(const std::string& msg)
      : std::runtime_error(msg) {}
};

inline constexpr long kPrecisionDefault = 256;
inline constexpr long kPrecisionCeiling = 4096;

}  // namespace kradical
