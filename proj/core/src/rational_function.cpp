#include "arterm/rational_function.hpp"

#include "arterm/errors.hpp"

namespace arterm {

namespace {

BigInt lcm_of_denominators(const Polynomial& p, BigInt acc) {
  for (const auto& c : p.coefficients()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  return acc;
}

BigInt gcd_of_numerators(const Polynomial& p, BigInt acc) {
  for (const auto& c : p.coefficients()) mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.get_num_mpz_t());
  return acc;
}

std::string parenthesized(const Polynomial& p, char variable) {
  std::size_t terms = 0;
  for (const auto& c : p.coefficients())
    if (c != 0) ++terms;
  const std::string s = p.to_string(variable);
  return terms > 1 ? "(" + s + ")" : s;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational low = den_[den_.order()];
  if (low != 1) {
    const Rational inv = Rational(1) / low;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational RationalFunction::evaluate(const Rational& z) const {
  const Rational d = den_.evaluate(z);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_.evaluate(z) / d;
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  return RationalFunction(num_.pow(exponent), den_.pow(exponent));
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

std::string RationalFunction::to_string(char variable) const {
  const IntegerFraction frac = clear_denominators(*this);
  if (frac.denominator.degree() == 0 && frac.denominator[0] == 1) return frac.numerator.to_string(variable);
  return parenthesized(frac.numerator, variable) + " / " + parenthesized(frac.denominator, variable);
}

std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t n) {
  const Polynomial& a = f.numerator();
  const Polynomial& b = f.denominator();
  const Rational b0 = b[0];
  if (b0 == 0) throw DomainError("denominator vanishes at z = 0 (pole at the origin)");
  const std::size_t db = b.coefficients().size();
  std::vector<Rational> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (std::size_t i = 1; i < db && i <= k; ++i) acc -= b.coefficients()[i] * q[k - i];
    q[k] = acc / b0;
  }
  return q;
}

IntegerFraction clear_denominators(const RationalFunction& f) {
  const BigInt scale = lcm_of_denominators(f.denominator(), lcm_of_denominators(f.numerator(), BigInt(1)));
  Polynomial num = f.numerator().scaled(Rational(scale));
  Polynomial den = f.denominator().scaled(Rational(scale));
  BigInt content = gcd_of_numerators(den, gcd_of_numerators(num, BigInt(0)));
  if (den[den.order()] < 0) content = -content;
  const Rational inv = Rational(1) / Rational(content);
  return {num.scaled(inv), den.scaled(inv)};
}

}  // namespace arterm
