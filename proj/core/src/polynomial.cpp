#include "arterm/polynomial.hpp"

#include "arterm/errors.hpp"

#include <algorithm>
#include <sstream>

namespace arterm {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  strip();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  strip();
}

Polynomial Polynomial::constant(const Rational& value) { return Polynomial(std::vector<Rational>{value}); }

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t power) {
  std::vector<Rational> c(power + 1);
  c[power] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Polynomial::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

std::size_t Polynomial::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  throw DomainError("zero polynomial has no order");
}

Rational Polynomial::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= factor;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Polynomial Polynomial::truncated(std::size_t n) const {
  if (n >= coeffs_.size()) return *this;
  return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p[i] + q[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p[i] - q[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational magnitude = arterm::abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << arterm::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      if (is_integer(magnitude))
        out << arterm::to_string(magnitude);
      else
        out << '(' << arterm::to_string(magnitude) << ')';
    }
    out << variable;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return p + q;
    case PolyOp::sub:
      return p - q;
    case PolyOp::mul:
      return p * q;
  }
  throw DomainError("unknown polynomial operation");
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = p.coefficients();
  const int dq = q.degree();
  if (p.degree() < dq) return {Polynomial{}, p};
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dq + 1));
  const Rational& lead = q.leading();
  for (int k = p.degree() - dq; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + dq)] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dq; ++j)
      rem[static_cast<std::size_t>(k + j)] -= factor * q[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

SignSplit split_signs(const Polynomial& p) {
  if (!p.is_integral()) throw DomainError("split_signs expects integer coefficients");
  std::vector<Rational> plus(p.coefficients().size());
  std::vector<Rational> minus(p.coefficients().size());
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c > 0)
      plus[i] = c;
    else if (c < 0)
      minus[i] = -c;
  }
  return {Polynomial(std::move(plus)), Polynomial(std::move(minus))};
}

}  // namespace arterm
