#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncsurf {

using Integer = mpz_class;
// Canonical form is maintained by GMP: lowest terms, positive denominator.
using Rational = mpq_class;

// Accepts "a" or "a/b" with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace ncsurf
