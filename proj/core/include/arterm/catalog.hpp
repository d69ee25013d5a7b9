#pragma once

// Named sequence families and the pinned worked examples.

#include "arterm/algebra.hpp"
#include "arterm/rational_function.hpp"
#include "arterm/recurrence.hpp"
#include "arterm/term.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arterm {

/// s(n+2) = P s(n+1) - Q s(n). Only Q != 0 is enforced, so the repeated
/// root case P^2 = 4Q (naturals, constant sequences) stays available.
struct LucasParams {
  BigInt P;
  BigInt Q;
};

enum class LucasKind { U, V };

/// U starts 0, 1 and V starts 2, P. Throws DomainError when Q == 0.
Recurrence lucas_U(const LucasParams& p);
Recurrence lucas_V(const LucasParams& p);
Recurrence lucas(const LucasParams& p, LucasKind kind);

/// z / (1 - Pz + Qz^2) or (2 - Pz) / (1 - Pz + Qz^2).
RationalFunction lucas_gf(const LucasParams& p, LucasKind kind);

/// (alpha^n - beta^n)/(alpha - beta) or alpha^n + beta^n, computed in
/// Z[g]/(g^2 - (P^2 - 4Q)) as ((P + g)^n -+ (P - g)^n) / 2^n.
BigInt lucas_closed_form_oracle(const LucasParams& p, LucasKind kind, std::size_t n);

/// Least positive solution of x^2 - k y^2 = 1 from the continued fraction
/// of sqrt(k). Throws DomainError for k < 2 or a perfect square.
std::pair<BigInt, BigInt> pell_fundamental(const BigInt& k);

/// Same answer by trying y = 1, 2, ... up to y_limit; nothing if not found.
std::optional<std::pair<BigInt, BigInt>> pell_fundamental_brute_force(const BigInt& k, unsigned long y_limit);

/// x and y recurrences s(n+2) = 2 x1 s(n+1) - s(n) with x: 1, x1 and y: 0, y1.
std::pair<Recurrence, Recurrence> pell_recurrences(const BigInt& k);

/// Coefficients of (z / (1 - z - z^2))^(r+1).
Recurrence fibonacci_convolution(unsigned r);

/// F(n) = 2^(1-n) sum_k 5^k binom(n, 2k+1).
BigInt fibonacci_binomial_oracle(std::size_t n);

struct Fixture {
  std::string id;
  std::string name;
  Recurrence recurrence;
  BigInt reference_b;
  BigInt reference_c;
  Term reference_term;
  std::size_t valid_from;
  std::string notes;
  /// An independent closed form for the same sequence, if one is known.
  std::optional<Term> alternate_term;
};

const std::vector<Fixture>& fixtures();

/// Throws DomainError for an unknown id.
const Fixture& fixture(std::string_view id);

}  // namespace arterm
