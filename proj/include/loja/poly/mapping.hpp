#pragma once

#include <string>
#include <vector>

#include "loja/poly/multipoly.hpp"

namespace loja {

/// A polynomial mapping F = (f_1, ..., f_m) in the declared variables.
struct MappingSpec {
  std::vector<std::string> variables;
  std::vector<MultiPoly> components;
};

}  // namespace loja
