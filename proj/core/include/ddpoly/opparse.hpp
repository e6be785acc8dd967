#pragma once

#include "ddpoly/opalg.hpp"

#include <string>

namespace ddpoly {

// Expression grammar for operators and module elements:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | name | '(' expr ')'
//
// Names d<k>/a<k> are the basic operators, e<k> marks a module generator and
// must end its term; every other name is a ground-field indeterminate.
// Multiplication is the noncommutative operator product, so "d1*x" expands
// by the commutation rules. '/' and negative powers apply to scalars only.
// Errors carry 1-based line/column positions; `line` sets the reported line.
OreOperator parse_operator(const std::string& text, const FieldPtr& field,
                           int line = 1);

ModuleElement parse_element(const std::string& text, const FieldPtr& field,
                            int rank, int line = 1);

}  // namespace ddpoly
