#pragma once

#include <array>
#include <map>
#include <string>

#include "dihedral/hpoly.hpp"

namespace dihedral {

/// Malformed polynomial or number text; carries the 0-based offending offset.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Sparse polynomial over Q in the fixed variables x, x0, x1, x2, u, v, w, z.
struct ParsedPoly {
  static constexpr std::array<const char*, 8> kNames{"x", "x0", "x1", "x2", "u", "v", "w", "z"};
  using Exponent = std::array<int, 8>;
  std::map<Exponent, mpq_class> terms;

  /// Indices of variables that occur with positive exponent.
  std::vector<int> used_variables() const;
};

/**
 * Parse the polynomial grammar: terms joined by + or -, each an optional
 * coefficient (integer or p/q) followed by *-separated powers such as x0^3.
 * Whitespace is ignored.
 */
ParsedPoly parse_polynomial(const std::string& text);

/// Univariate polynomial in the single variable `var` (default "x").
UPoly parse_upoly(const std::string& text, Field f, const std::string& var = "x");
/// Binary form in x0, x1; `degree` labels the zero polynomial and is checked otherwise.
BinaryForm parse_binary_form(const std::string& text, Field f, int degree);
/// Binary form in x0, x1 of whatever degree the text has (must be nonzero).
BinaryForm parse_binary_form(const std::string& text, Field f);
/// Homogeneous form in x0..x_{nvars-1}.
HPoly parse_hpoly(const std::string& text, Field f, int nvars);
HPoly parse_hpoly(const std::string& text, Field f, int nvars, int degree);

}  // namespace dihedral
