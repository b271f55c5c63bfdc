#pragma once

#include <string>

#include "superdiv/polynomial.hpp"

namespace superdiv {

// Textual grammar shared by the CLI and the JSON formats:
//   polynomial := ['-'] term (('+'|'-') term)*
//   term       := rational ('*' factor)* | factor ('*' factor)*
//   factor     := name ['^' integer]
//   rational   := integer ['/' integer]
// Whitespace between tokens is ignored; parsing is exact (no floats). An odd
// variable squared yields the zero term; odd factors written out of order
// contribute the usual sign.
SuperPolynomial parse_polynomial(const ContextPtr& ctx, const std::string& text);

// Canonical printer: terms in descending monomial order, each as
// coef*evens*odds with variables in declared order; the zero polynomial
// prints "0". Output reparses to the same polynomial.
std::string to_string(const SuperPolynomial& p);

}  // namespace superdiv
