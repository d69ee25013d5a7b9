#pragma once

// Exact integer and rational scalars. Both are GMP values; mpq_class keeps
// itself canonical (reduced, positive denominator) under every arithmetic op.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace arterm {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses an optionally signed decimal integer; rejects anything else.
BigInt parse_bigint(std::string_view text);
/// Accepts "p", "-p" or "p/q" in decimal.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
/// Numerator of an integral rational. Throws DomainError otherwise.
BigInt to_integer(const Rational& value);

/// Number of bits in |value|; zero has length 0.
std::size_t bit_length(const BigInt& value);

BigInt ipow(const BigInt& base, unsigned long exponent);
Rational ipow(const Rational& base, unsigned long exponent);

/// Floor of a rational.
BigInt floor(const Rational& value);

BigInt abs(const BigInt& value);
Rational abs(const Rational& value);

}  // namespace arterm
