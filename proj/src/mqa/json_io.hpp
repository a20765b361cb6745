#pragma once

#include <string>
#include <vector>

#include "boolpoly.hpp"
#include "intpoly.hpp"

namespace mqa {

// Integer-coefficient system over named variables (the lifted format).
struct IntSystem {
  std::vector<std::string> variables;
  std::vector<IntPolynomial> polynomials;
};

// {"variables":[...], "polynomials":[[[varIdx,...],...],...]}
// monomials DRL-descending, indices ascending inside a monomial.
std::string bool_system_to_json(const BooleanSystem& sys);
BooleanSystem bool_system_from_json(const std::string& text);

// {"variables":[...], "polynomials":[[[coeff,[[var,exp],...]],...],...]}
// coeff is a JSON integer, or a decimal string when it exceeds int64.
std::string int_system_to_json(const IntSystem& sys);
IntSystem int_system_from_json(const std::string& text);

// True if the JSON parses as the Boolean format (monomial lists of ints).
bool json_is_bool_system(const std::string& text);

}  // namespace mqa
