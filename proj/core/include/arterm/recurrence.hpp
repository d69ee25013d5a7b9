#pragma once

#include "arterm/algebra.hpp"
#include "arterm/rational_function.hpp"

#include <cstddef>
#include <vector>

namespace arterm {

/// s(n+d) + a_1 s(n+d-1) + ... + a_d s(n) = 0 with integer initial terms
/// s(0..d-1). Coefficients are stored as a_1..a_d, i.e. with the sign of the
/// characteristic polynomial 1 + a_1 z + ... + a_d z^d.
class Recurrence {
 public:
  /// Throws DomainError unless d >= 1, a_d != 0 and |initial| == d.
  Recurrence(std::vector<Rational> coefficients, std::vector<BigInt> initial_terms);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const std::vector<BigInt>& initial_terms() const noexcept { return init_; }

  /// 1 + a_1 z + ... + a_d z^d.
  Polynomial characteristic() const;

  friend bool operator==(const Recurrence&, const Recurrence&) = default;

 private:
  std::vector<Rational> coeffs_;
  std::vector<BigInt> init_;
};

/// Exact values s(0..N) of a recurrence.
struct SequenceWindow {
  std::vector<BigInt> values;
  Recurrence source;

  const BigInt& operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const noexcept { return values.size(); }
};

/// Iterates the recurrence up to index n. Throws NonIntegerTermError when a
/// computed term is not an integer.
SequenceWindow eval_oracle(const Recurrence& rec, std::size_t n);

/// A(z)/B(z) with B the characteristic polynomial and A the first d
/// coefficients of B(z) * sum s(i) z^i; returned reduced.
RationalFunction generating_function(const Recurrence& rec);

/// f + c / (1 - c z); f itself when c == 0.
RationalFunction gf_shift(const RationalFunction& f, const BigInt& c);

/// Inverse of generating_function: the recurrence read off a reduced power
/// series A/B with deg A < deg B. Throws DomainError otherwise.
Recurrence recurrence_from_gf(const RationalFunction& f);

/// Smallest c >= 1 with d (|a_1| + ... + |a_d|) < c and |s(k)| < c^(k+1) for
/// k < d, which forces |s(n)| < c^(n+1) for every n.
BigInt growth_constant(const Recurrence& rec);

/// Smallest c >= 1 with sum |a_i| c^-i <= 1 and |s(k)| < c^(k+1) for
/// 1 <= k <= d. Induction on the recurrence then gives |s(n)| < c^(n+1) for
/// every n >= 1. Never larger than growth_constant restricted to n >= 1.
BigInt weighted_growth_constant(const Recurrence& rec);

/// |s(n)| <= scale * rate^n for all n >= 1, with rate a rational just above
/// the positive root of sum |a_i| x^-i = 1.
struct GrowthRate {
  Rational rate;
  Rational scale;
};

GrowthRate growth_rate(const Recurrence& rec, unsigned bisection_steps = 32);

/// Sufficient test that no term is negative: every -a_i and every initial
/// term is nonnegative; or the generating function N / prod P_i^i has N >= 0
/// and each square-free factor P_i = 1 - (nonnegative terms); or s(0..probe)
/// is nonnegative and its tail satisfies a ratio bound s(n+1) >= lambda s(n)
/// that the recurrence preserves.
bool is_provably_nonnegative(const Recurrence& rec, std::size_t probe);

}  // namespace arterm
