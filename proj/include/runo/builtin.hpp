#pragma once

#include <array>
#include <string_view>

#include "runo/algebra.hpp"

namespace runo {

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One of the five generators "A1".."A5". Throws UnknownName.
///
/// A1..A4 sit on the chain 0 < 2 < 1, A5 on the four-element Boolean lattice
/// with atoms 2 and 3. Element index i carries label "i".
const FiniteAlgebra& builtin(std::string_view name);
const FiniteAlgebra& builtin(int index);

/// A1..A5 in order.
const std::array<FiniteAlgebra, 5>& builtins();

}  // namespace runo
