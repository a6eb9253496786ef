#pragma once

#include <string>

#include "demazure/poly.hpp"

namespace demazure {

// Evaluates the expression mini-language used by the CLI:
//   x (1,0,3)        the monomial x^alpha
//   atom (1,0,3)     the Demazure atom A_alpha
//   key (3,0,1)      the key polynomial kappa_gamma
//   pi:121 (4,1,0)   the pi operator word applied to x^alpha
//   theta:21 (3,1,0) the theta operator word applied to x^alpha
//   x1^2*x2          plain monomials, with + - * ( ) and integers
// Operator words act rightmost letter first, as in the operator
// products they denote.
Polynomial eval_expression(const std::string& text);

} // namespace demazure
