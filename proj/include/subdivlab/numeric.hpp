#pragma once

#include <string>

#include <gmpxx.h>

namespace subdiv {

// base^exp for integer exp; negative exponents give exact rationals.
// base == 0 with exp < 0 is rejected.
mpq_class pow_rational(const mpq_class& base, long exp);

mpz_class pow_integer(const mpz_class& base, unsigned long exp);

// Decides count <= delta^(half_exp / 2) exactly, for count >= 0, delta >= 0
// and odd half_exp (the exponent i - 2k + 1/2 doubled). delta = 0 with a
// negative exponent is treated as an infinite threshold.
bool leq_half_power(const mpz_class& count, const mpq_class& delta, long half_exp);

// Parses "3", "-2/7" or decimal notation like "0.25" into an exact rational.
mpq_class parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise. Used for byte-stable report output.
std::string rational_to_string(const mpq_class& q);

// Fixed-point decimal rendering with the given number of fractional digits,
// round-half-away-from-zero. Exact, locale-free, byte-stable.
std::string rational_to_decimal(const mpq_class& q, int digits);

}  // namespace subdiv
