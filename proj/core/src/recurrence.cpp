#include "arterm/recurrence.hpp"

#include "arterm/errors.hpp"

#include <algorithm>
#include <string>

namespace arterm {

Recurrence::Recurrence(std::vector<Rational> coefficients, std::vector<BigInt> initial_terms)
    : coeffs_(std::move(coefficients)), init_(std::move(initial_terms)) {
  if (coeffs_.empty()) throw DomainError("recurrence order must be at least 1");
  if (coeffs_.back() == 0) throw DomainError("last recurrence coefficient must be nonzero");
  if (init_.size() != coeffs_.size())
    throw DomainError("expected " + std::to_string(coeffs_.size()) + " initial terms, got " +
                      std::to_string(init_.size()));
}

Polynomial Recurrence::characteristic() const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back(1);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c));
}

SequenceWindow eval_oracle(const Recurrence& rec, std::size_t n) {
  const std::size_t d = rec.order();
  const auto& a = rec.coefficients();
  std::vector<BigInt> s;
  s.reserve(std::max(n + 1, d));
  s.insert(s.end(), rec.initial_terms().begin(), rec.initial_terms().end());
  for (std::size_t k = d; k <= n; ++k) {
    Rational next = 0;
    for (std::size_t i = 1; i <= d; ++i) next -= a[i - 1] * s[k - i];
    if (!is_integer(next))
      throw NonIntegerTermError("term s(" + std::to_string(k) + ") = " + to_string(next) + " is not an integer", k);
    s.push_back(next.get_num());
  }
  s.resize(n + 1);
  return {std::move(s), rec};
}

RationalFunction generating_function(const Recurrence& rec) {
  const Polynomial b = rec.characteristic();
  std::vector<Rational> init(rec.initial_terms().begin(), rec.initial_terms().end());
  const Polynomial a = (Polynomial(std::move(init)) * b).truncated(rec.order());
  return RationalFunction(a, b);
}

RationalFunction gf_shift(const RationalFunction& f, const BigInt& c) {
  if (c == 0) return f;
  const Rational cq(c);
  return f + RationalFunction(Polynomial::constant(cq), Polynomial({Rational(1), Rational(-cq)}));
}

Recurrence recurrence_from_gf(const RationalFunction& f) {
  const Polynomial& b = f.denominator();
  if (!f.is_power_series()) throw DomainError("generating function has a pole at the origin");
  if (b.degree() < 1 || f.numerator().degree() >= b.degree())
    throw DomainError("generating function must be proper with a nonconstant denominator");
  const auto d = static_cast<std::size_t>(b.degree());
  const Rational b0 = b[0];
  std::vector<Rational> coeffs;
  for (std::size_t i = 1; i <= d; ++i) coeffs.push_back(b[i] / b0);
  std::vector<BigInt> init;
  for (const auto& c : series_coefficients(f, d - 1)) init.push_back(to_integer(c));
  return Recurrence(std::move(coeffs), std::move(init));
}

namespace {

// |s(k)| < c^(k+1) for every k in [from, to].
bool window_below(const std::vector<BigInt>& s, std::size_t from, std::size_t to, const BigInt& c) {
  BigInt power = ipow(c, static_cast<unsigned long>(from + 1));
  for (std::size_t k = from; k <= to; ++k) {
    if (abs(s[k]) >= power) return false;
    power *= c;
  }
  return true;
}

// sum |a_i| x^-i <= 1
bool weighted_sum_at_most_one(const std::vector<Rational>& a, const Rational& x) {
  Rational sum = 0;
  Rational inv_power = 1;
  const Rational inv = Rational(1) / x;
  for (const auto& ai : a) {
    inv_power *= inv;
    sum += abs(ai) * inv_power;
  }
  return sum <= 1;
}

// Smallest c >= 1 satisfying a predicate that is monotone in c.
template <typename Pred>
BigInt smallest_satisfying(Pred pred) {
  BigInt hi = 1;
  while (!pred(hi)) hi *= 2;
  BigInt lo = hi / 2 + 1;
  if (hi == 1) return hi;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (pred(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

}  // namespace

BigInt growth_constant(const Recurrence& rec) {
  const std::size_t d = rec.order();
  Rational weight = 0;
  for (const auto& a : rec.coefficients()) weight += abs(a);
  weight *= Rational(static_cast<unsigned long>(d));
  const auto& s = rec.initial_terms();
  return smallest_satisfying([&](const BigInt& c) { return Rational(c) > weight && window_below(s, 0, d - 1, c); });
}

BigInt weighted_growth_constant(const Recurrence& rec) {
  const std::size_t d = rec.order();
  const SequenceWindow w = eval_oracle(rec, d);
  return smallest_satisfying([&](const BigInt& c) {
    return weighted_sum_at_most_one(rec.coefficients(), Rational(c)) && window_below(w.values, 1, d, c);
  });
}

GrowthRate growth_rate(const Recurrence& rec, unsigned bisection_steps) {
  const std::size_t d = rec.order();
  const auto& a = rec.coefficients();
  Rational hi(weighted_growth_constant(rec));
  Rational lo = 0;
  for (unsigned step = 0; step < bisection_steps; ++step) {
    const Rational mid = (lo + hi) / 2;
    if (weighted_sum_at_most_one(a, mid))
      hi = mid;
    else
      lo = mid;
  }
  const SequenceWindow w = eval_oracle(rec, d);
  Rational scale = 0;
  Rational power = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    power *= hi;
    const Rational ratio = Rational(abs(w[k])) / power;
    if (ratio > scale) scale = ratio;
  }
  return {hi, scale};
}

namespace {

bool syntactically_nonnegative(const Recurrence& rec) {
  return std::all_of(rec.coefficients().begin(), rec.coefficients().end(), [](const Rational& a) { return a <= 0; }) &&
         std::all_of(rec.initial_terms().begin(), rec.initial_terms().end(), [](const BigInt& s) { return s >= 0; });
}

// Lower bound on s(n+d) / s(n+d-1) given the ratio bound lambda on the
// preceding d-1 steps and nonnegative terms.
Rational preserved_ratio(const std::vector<Rational>& a, const Rational& lambda) {
  Rational factor = -a[0];
  Rational inv_power = 1;
  for (std::size_t i = 2; i <= a.size(); ++i) {
    inv_power /= lambda;
    const Rational beta = -a[i - 1];
    if (beta < 0) factor += beta * inv_power;
  }
  return factor;
}

Polynomial derivative(const Polynomial& p) {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return Polynomial(std::move(d));
}

// 1 - (nonnegative terms) after scaling the constant term to 1, so that its
// reciprocal expands with nonnegative coefficients.
bool reciprocal_is_nonnegative(const Polynomial& p) {
  if (p.is_zero() || p[0] == 0) return false;
  const Polynomial q = p.scaled(Rational(1) / p[0]);
  for (std::size_t i = 1; i < q.coefficients().size(); ++i)
    if (q[i] > 0) return false;
  return true;
}

// GF = N / prod P_i^i (Yun's square-free decomposition) with N >= 0 and
// every 1/P_i >= 0 coefficientwise.
bool factored_nonnegative(const Recurrence& rec) {
  const RationalFunction f = generating_function(rec);
  const Polynomial& den = f.denominator();
  if (den.degree() < 1 || den[0] == 0) return false;
  const Rational scale = Rational(1) / den[0];
  for (const auto& a : f.numerator().coefficients())
    if (a * scale < 0) return false;

  const Polynomial d1 = derivative(den);
  const Polynomial c = poly_gcd(den, d1);
  Polynomial w = divmod(den, c).first;
  Polynomial y = divmod(d1, c).first;
  Polynomial z = y - derivative(w);
  while (w.degree() > 0) {
    const Polynomial g = poly_gcd(w, z);
    if (g.degree() > 0 && !reciprocal_is_nonnegative(g)) return false;
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - derivative(w);
  }
  return true;
}

}  // namespace

bool is_provably_nonnegative(const Recurrence& rec, std::size_t probe) {
  if (syntactically_nonnegative(rec) || factored_nonnegative(rec)) return true;
  const std::size_t d = rec.order();
  if (d < 2 || probe < d) return false;

  const SequenceWindow w = eval_oracle(rec, probe);
  if (std::any_of(w.values.begin(), w.values.end(), [](const BigInt& s) { return s < 0; })) return false;

  // Ratio pairs (s(j), s(j+1)) for j in [probe-d+1, probe-1].
  bool have_ratio = false;
  Rational min_ratio;
  for (std::size_t j = probe + 1 - d; j < probe; ++j) {
    if (w[j] == 0) continue;
    const Rational r = make_rational(w[j + 1], w[j]);
    if (!have_ratio || r < min_ratio) min_ratio = r;
    have_ratio = true;
  }
  if (!have_ratio || min_ratio <= 0) return false;

  const Rational candidates[] = {min_ratio, Rational(floor(min_ratio)), Rational(1)};
  for (const auto& lambda : candidates) {
    if (lambda <= 0 || lambda > min_ratio) continue;
    if (preserved_ratio(rec.coefficients(), lambda) >= lambda) return true;
  }
  return false;
}

}  // namespace arterm
