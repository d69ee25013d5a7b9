#include "arterm/algebra.hpp"

#include "arterm/errors.hpp"

#include <cctype>

namespace arterm {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw DomainError("expected a decimal integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw DomainError("expected a decimal integer, got '" + std::string(text) + "'");
  }
  BigInt value(std::string(text.substr(i)), 10);
  return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw DomainError("denominator must be unsigned in '" + std::string(text) + "'");
  return make_rational(num, parse_bigint(den_text));
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt to_integer(const Rational& value) {
  if (!is_integer(value)) throw DomainError("expected an integer, got " + to_string(value));
  return value.get_num();
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational ipow(const Rational& base, unsigned long exponent) {
  Rational result(ipow(BigInt(base.get_num()), exponent), ipow(BigInt(base.get_den()), exponent));
  result.canonicalize();
  return result;
}

BigInt floor(const Rational& value) {
  BigInt result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

BigInt abs(const BigInt& value) { return value < 0 ? BigInt(-value) : value; }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace arterm
