#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "loja/poly/multipoly.hpp"

namespace loja {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_variable, non_rational_literal };

  ParseError(Kind kind, std::size_t position, std::string token, const std::string& what);

  Kind kind() const { return kind_; }
  /// Byte offset into the input where the error was detected.
  std::size_t position() const { return position_; }
  /// The offending token text (may be empty at end of input).
  const std::string& token() const { return token_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string token_;
};

/// Parses a polynomial expression: rational literals ("3", "3/2"), variables,
/// + - * ^ with non-negative integer exponents, parentheses. Implicit
/// multiplication is rejected. U+2212 is accepted as a minus sign.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// All identifiers appearing in the text, in order of first appearance.
std::vector<std::string> collect_identifiers(std::string_view text);

}  // namespace loja
