#pragma once

// Synthesis of s(n) = E(n, b) - c^(n+1) for a C-recursive integer sequence.

#include "arterm/algebra.hpp"
#include "arterm/rational_function.hpp"
#include "arterm/recurrence.hpp"
#include "arterm/term.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace arterm {

struct BoundsCertificate {
  BigInt c;
  BigInt c_t;
  Rational rho;
  BigInt b1;
  std::size_t m = 3;
  BigInt b2;

  // Growth certificate of the chosen base: |t(n)| <= scale * lambda^n for
  // n >= 1, so t(n) < b^(n-2) and b^-n < rho for n >= m_chosen.
  BigInt b;
  Rational lambda;
  Rational scale;
  BigInt base_floor;
  /// Absent when b was forced and has no growth certificate.
  std::optional<std::size_t> m_chosen;

  /// Re-checks every inequality with exact arithmetic.
  bool holds() const;
};

struct SynthesisOptions {
  std::size_t horizon = 40;
  std::optional<BigInt> force_c;
  std::optional<BigInt> force_b;
  /// Take c = 0 without a proof; the final check still rejects a wrong claim.
  bool assume_nonnegative = false;
};

struct SynthesisResult {
  Recurrence recurrence;
  Term term;
  BigInt b;
  BigInt c;
  std::size_t valid_from = 1;
  bool valid_at_zero = false;
  BoundsCertificate certificate;
  RationalFunction gf_t;
};

/// |d0| / (|d0| + max |di|) for an integer polynomial with d0 != 0; 1 for a
/// constant. Every root of den has modulus at least this.
Rational radius_lower_bound(const Polynomial& den);

/// 0 when the sequence is provably nonnegative, otherwise a c with
/// s(n) + c^(n+1) > 0 for every n >= 0.
BigInt find_shift(const Recurrence& rec, std::size_t probe = 64);

/// Smallest b1 > c_t (b1 >= 2) with the smallest m >= 3 such that
/// c_t^(m+1) < b1^(m-2) and b1^-m < rho.
std::pair<BigInt, std::size_t> find_b1_m(const BigInt& c_t, const Rational& rho);

/// Smallest b2 >= max(8, c_t^6 + 1) with 1/b2 < rho.
BigInt find_b2(const BigInt& c_t, const Rational& rho);

/// Smallest m >= 3 with scale * lambda^m * b^2 < b^m and b^m * rho > 1, or
/// nothing if none exists up to cap (in particular when b <= lambda).
std::optional<std::size_t> base_certificate(const GrowthRate& growth, const Rational& rho, const BigInt& b,
                                            std::size_t cap = 256);

/// Everything minimal_valid_b needs about the shifted sequence t.
struct ShiftedProblem {
  SequenceWindow oracle;  // s, not t
  BigInt c;
  RationalFunction gf_t;
  SignSplit numerator;
  SignSplit denominator;
  int h = 0;
  GrowthRate growth;
  Rational rho;
};

ShiftedProblem prepare(const Recurrence& rec, const BigInt& c, std::size_t horizon);

/// True when E(n, b) - c^(n+1) = s(n) for 1 <= n <= max(m_b - 1, horizon)
/// and b has a growth certificate m_b.
bool base_is_valid(const ShiftedProblem& problem, const BigInt& b, std::size_t horizon);

/// Minimum valid b in [lo, hi] by binary search, certified, with an
/// ascending scan as fallback. Throws DomainError when none is valid.
BigInt minimal_valid_b(const ShiftedProblem& problem, const BigInt& lo, const BigInt& hi, std::size_t horizon);

/// Throws AllZeroSequenceError for a sequence whose first max(d, 10) terms
/// vanish and VerificationError when the assembled term fails the check.
SynthesisResult synthesize(const Recurrence& rec, const SynthesisOptions& options = {});

/// floor(b^(n^2) f(b^-n)) mod b^n computed directly over Q.
BigInt extract_direct(const RationalFunction& f, const BigInt& b, std::size_t n);

}  // namespace arterm
