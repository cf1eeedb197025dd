#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "apostol/polynomial.hpp"
#include "apostol/rational.hpp"

namespace apostol {

using CheckValue = std::variant<Rational, Poly>;

// Outcome of evaluating one identity on one concrete instance. Both sides are
// computed exactly; equal means exact equality (coefficientwise for
// polynomials). A non-empty note marks a documented erratum, which a
// verification campaign does not count as a counterexample.
struct CheckReport {
  std::string identity_id;
  std::vector<std::pair<std::string, std::string>> instance;
  CheckValue lhs;
  CheckValue rhs;
  bool equal = false;
  std::string note;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;  // instance ordinal within the identity
};

}  // namespace apostol
