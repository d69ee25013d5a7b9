#pragma once

#include "arterm/algebra.hpp"

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace arterm {

/// Univariate polynomial over Q; coefficient i multiplies z^i. Trailing zero
/// coefficients are always stripped, so the zero polynomial has no
/// coefficients at all and degree kZeroDegree.
class Polynomial {
 public:
  /// Degree of the zero polynomial; compares below every real degree.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Rational& value);
  static Polynomial monomial(const Rational& coefficient, std::size_t power);

  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of z^i; zero past the degree.
  Rational operator[](std::size_t i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& leading() const;

  bool is_integral() const;
  /// Lowest power with a nonzero coefficient. Throws on the zero polynomial.
  std::size_t order() const;

  Rational evaluate(const Rational& z) const;
  Polynomial scaled(const Rational& factor) const;
  Polynomial pow(unsigned exponent) const;
  /// Leading coefficient 1 (the zero polynomial stays zero).
  Polynomial monic() const;
  /// Drops all powers >= n.
  Polynomial truncated(std::size_t n) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

  /// Canonical text such as "1 - z - z^2" or "2z^3".
  std::string to_string(char variable = 'z') const;

 private:
  void strip();

  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op);

/// Euclidean division: p = quotient * q + remainder, deg(remainder) < deg(q).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);

/// Monic gcd by the Euclidean remainder sequence over Q. Throws DomainError
/// when both inputs are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// Sign split of an integer polynomial: p = plus - minus, both with natural
/// coefficients and disjoint supports.
struct SignSplit {
  Polynomial plus;
  Polynomial minus;
};

SignSplit split_signs(const Polynomial& p);

}  // namespace arterm
