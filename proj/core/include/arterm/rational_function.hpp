#pragma once

#include "arterm/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace arterm {

/// A(z)/B(z) over Q, kept reduced: gcd(A, B) is constant and B's lowest
/// nonzero coefficient is 1. Two equal functions therefore compare equal
/// structurally.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  explicit RationalFunction(Polynomial numerator);
  /// Throws DomainError when the denominator is zero.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  /// True when the denominator does not vanish at z = 0.
  bool is_power_series() const { return den_[0] != 0; }

  Rational evaluate(const Rational& z) const;
  RationalFunction pow(unsigned exponent) const;

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
  friend bool operator==(const RationalFunction& f, const RationalFunction& g) = default;

  /// "z / (1 - z - z^2)" in the integer normal form of clear_denominators().
  std::string to_string(char variable = 'z') const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// First n+1 Taylor coefficients at 0 by power-series long division.
/// Throws DomainError when the denominator has no constant term.
std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n);

struct IntegerFraction {
  Polynomial numerator;
  Polynomial denominator;
};

/// Same ratio with integer coefficients, joint content 1, and a positive
/// constant (or lowest-order) denominator coefficient.
IntegerFraction clear_denominators(const RationalFunction& f);

}  // namespace arterm
