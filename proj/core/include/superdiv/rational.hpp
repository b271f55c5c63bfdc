#pragma once

#include <gmpxx.h>
#include <string>

namespace superdiv {

// Exact rational scalar. GMP keeps values canonical after arithmetic; the
// helpers below canonicalize on construction from raw numerator/denominator
// and enforce the strict "no floats" literal grammar p or p/q.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses an optionally signed integer or p/q literal. Throws
// std::invalid_argument on anything else (decimal points, exponents, ...).
Rational rational_from_string(const std::string& text);

std::string rational_to_string(const Rational& value);

}  // namespace superdiv
