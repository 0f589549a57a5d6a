#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

#include "aybe/error.hpp"

namespace aybe {

// Exact scalar field. mpq keeps values in lowest terms with positive
// denominator after every operation, which is exactly the invariant we need.
using BigInt   = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// den == 0 throws; result is canonical (division always canonicalizes,
// the raw (num, den) constructor does not for negative denominators).
Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p" and "p/q" with optional sign on either part. No decimals.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1. Sign on the numerator.
std::string to_string(const Rational& value);

} // namespace aybe
