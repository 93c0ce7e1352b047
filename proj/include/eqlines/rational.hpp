#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eqlines {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p/q" or an integer "p". Decimal notation is rejected so exactness
// starts at the boundary.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt floor(const Rational& q);

// 15 significant digits, the decimal form used in every JSON record.
std::string format_decimal(double x);

}  // namespace eqlines
