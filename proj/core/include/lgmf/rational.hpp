#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lgmf {

using Rational = mpq_class;

/// Canonical "num/den" form; integers print without a denominator.
std::string to_string(const Rational& q);

/// Always "num/den", as used by JSON reports.
std::string to_fraction_string(const Rational& q);

/// Parses "n" or "n/d" (optional leading '-').
Rational parse_rational(std::string_view text);

}  // namespace lgmf
