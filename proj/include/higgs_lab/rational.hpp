#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace higgs_lab {

/// Arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;

/// Parses "num/den" or a bare integer. Throws Error(ParseError) on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always emits "num/den" (den > 0), e.g. "3/1", "-1/2".
std::string format_rational(const Rational& value);

/// Compact human form: "3", "-1/2".
std::string pretty_rational(const Rational& value);

Rational factorial(unsigned n);

} // namespace higgs_lab
