// Structure-equation DSL (".lie" files) and the matching form-expression
// syntax used for printed generators.
//
//   model    := "model" IDENT "{" "dim" INT decl+ "}"
//   decl     := "d" gen "=" rhs
//   rhs      := "0" | signedterm (("+"|"-") term)*
//   term     := [coeff "*"] gen ("^" gen)+
//   gen      := "w" INT | "cw" INT          (cw forbidden on a left-hand side)
//   coeff    := RAT | "i" | "(" RAT [("+"|"-") RAT ["*"] "i"] ")"
//   RAT      := INT ["/" INT]
//
// "#" starts a comment running to the end of the line.  Exactly one decl per
// k in 1..dim.  A (0,2) monomial on a right-hand side is an integrability
// error.

#pragma once

#include <string>

#include "bcwb/model.hpp"

namespace bcwb {

LieModel parse_model(const std::string& text);

// Form expressions reuse the rhs syntax but allow terms of any degree,
// including bare scalars ("1", "i", "1/2") and single generators.
Form parse_form(const std::string& text, int n);

// DSL source for a model; parse_model(print_model(m)) reproduces m exactly.
std::string print_model(const LieModel& m);

}  // namespace bcwb
