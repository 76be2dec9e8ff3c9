#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "loja/poly/mapping.hpp"

namespace loja::cli {

/// Raised for malformed input or usage; carries the offending token.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string token, const std::string& what)
      : std::runtime_error(what), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// Parses a mapping from text: components separated by ';' or newlines, an
/// optional leading "vars: ..." declaration, '#' comment lines ignored.
/// Without a declaration the variables are x, y (when only those occur) or
/// z1..zn; `default_vars` replaces x, y when given.
MappingSpec parse_mapping(const std::string& text, const std::vector<std::string>& default_vars = {});

/// Runs one command. `args` excludes the program name. Returns the exit code:
/// 0 on success, 2 on usage or parse errors, 1 on internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loja::cli
