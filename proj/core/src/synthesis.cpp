#include "arterm/synthesis.hpp"

#include "arterm/errors.hpp"

#include <algorithm>
#include <map>

namespace arterm {

namespace {

Rational inverse_power(const BigInt& b, std::size_t m) {
  return make_rational(1, ipow(b, static_cast<unsigned long>(m)));
}

bool term_matches(const Term& term, const SequenceWindow& oracle, const BigInt& c, std::size_t n) {
  Assignment env{{"n", BigInt(static_cast<unsigned long>(n))}};
  const BigInt shifted = oracle[n] + ipow(c, static_cast<unsigned long>(n + 1));
  return evaluate(term, env) == shifted;
}

Term term_for(const ShiftedProblem& problem, const BigInt& b) {
  return build_E(problem.numerator.plus, problem.numerator.minus, problem.denominator.plus,
                 problem.denominator.minus, problem.h, b);
}

constexpr std::size_t kCertificateCap = 256;

}  // namespace

bool BoundsCertificate::holds() const {
  if (m < 3 || c < 0 || c_t < 1 || rho <= 0 || b1 <= c_t || b1 < 2) return false;
  if (!(inverse_power(b1, m) < rho)) return false;
  if (!(ipow(c_t, m + 1) < ipow(b1, m - 2))) return false;
  if (b2 < 8 || b2 < ipow(c_t, 6) + 1) return false;
  if (!(make_rational(1, b2) < rho)) return false;
  if (m_chosen) {
    const unsigned long mc = *m_chosen;
    if (mc < 3 || b <= lambda) return false;
    if (!(scale * ipow(lambda, mc) * Rational(b * b) < Rational(ipow(b, mc)))) return false;
    if (!(Rational(ipow(b, mc)) * rho > 1)) return false;
  }
  return true;
}

Rational radius_lower_bound(const Polynomial& den) {
  if (den.is_zero() || den[0] == 0) throw DomainError("radius bound needs a nonzero constant term");
  if (den.degree() == 0) return Rational(1);
  Rational largest = 0;
  for (std::size_t i = 1; i < den.coefficients().size(); ++i) largest = std::max(largest, abs(den[i]));
  const Rational d0 = abs(den[0]);
  return Rational(d0 / (d0 + largest));
}

BigInt find_shift(const Recurrence& rec, std::size_t probe) {
  if (is_provably_nonnegative(rec, probe)) return 0;
  const BigInt c = weighted_growth_constant(rec);
  const BigInt at_zero = 1 - rec.initial_terms().front();
  return c > at_zero ? c : at_zero;
}

std::pair<BigInt, std::size_t> find_b1_m(const BigInt& c_t, const Rational& rho) {
  if (c_t < 1 || rho <= 0) throw DomainError("find_b1_m needs c_t >= 1 and rho > 0");
  const BigInt b1 = c_t + 1 > 2 ? BigInt(c_t + 1) : BigInt(2);
  std::size_t m = 3;
  BigInt lhs = ipow(c_t, 4);
  BigInt rhs = b1;
  BigInt b1_m = ipow(b1, 3);
  while (!(lhs < rhs && Rational(b1_m) * rho > 1)) {
    ++m;
    lhs *= c_t;
    rhs *= b1;
    b1_m *= b1;
  }
  return {b1, m};
}

BigInt find_b2(const BigInt& c_t, const Rational& rho) {
  if (c_t < 1 || rho <= 0) throw DomainError("find_b2 needs c_t >= 1 and rho > 0");
  BigInt b2 = ipow(c_t, 6) + 1;
  if (b2 < 8) b2 = 8;
  const BigInt above = floor(Rational(1 / rho)) + 1;
  return b2 > above ? b2 : above;
}

std::optional<std::size_t> base_certificate(const GrowthRate& growth, const Rational& rho, const BigInt& b,
                                            std::size_t cap) {
  if (Rational(b) <= growth.rate) return std::nullopt;
  Rational bound = growth.scale * ipow(growth.rate, 3) * Rational(b * b);
  BigInt b_m = ipow(b, 3);
  for (std::size_t m = 3; m <= cap; ++m) {
    if (bound < Rational(b_m) && Rational(b_m) * rho > 1) return m;
    bound *= growth.rate;
    b_m *= b;
  }
  return std::nullopt;
}

ShiftedProblem prepare(const Recurrence& rec, const BigInt& c, std::size_t horizon) {
  ShiftedProblem p{eval_oracle(rec, std::max(horizon, kCertificateCap)), c, {}, {}, {}, 0, {}, {}};
  p.gf_t = gf_shift(generating_function(rec), c);
  const IntegerFraction cleared = clear_denominators(p.gf_t);
  p.numerator = split_signs(cleared.numerator);
  p.denominator = split_signs(cleared.denominator);
  p.h = cleared.denominator.degree();
  p.growth = growth_rate(recurrence_from_gf(p.gf_t));
  p.rho = radius_lower_bound(cleared.denominator);
  return p;
}

bool base_is_valid(const ShiftedProblem& problem, const BigInt& b, std::size_t horizon) {
  const auto m_b = base_certificate(problem.growth, problem.rho, b, kCertificateCap);
  if (!m_b) return false;
  const Term term = term_for(problem, b);
  const std::size_t last = std::max(*m_b - 1, horizon);
  for (std::size_t n = 1; n <= last; ++n)
    if (!term_matches(term, problem.oracle, problem.c, n)) return false;
  return true;
}

BigInt minimal_valid_b(const ShiftedProblem& problem, const BigInt& lo, const BigInt& hi, std::size_t horizon) {
  if (lo > hi) throw DomainError("empty base range");
  std::map<BigInt, bool> seen;
  auto valid = [&](const BigInt& b) {
    auto it = seen.find(b);
    if (it == seen.end()) it = seen.emplace(b, base_is_valid(problem, b, horizon)).first;
    return it->second;
  };

  // Validity is not monotone in b (Pell numbers: 3 and 5 work, 4 fails at
  // n = 1), so the binary-search answer only bounds an ascending scan.
  BigInt upper = hi;
  if (valid(hi)) {
    BigInt left = lo;
    BigInt right = hi;
    while (left < right) {
      const BigInt mid = (left + right) / 2;
      if (valid(mid))
        right = mid;
      else
        left = mid + 1;
    }
    if (base_is_valid(problem, right, horizon)) upper = right;
  }
  for (BigInt b = lo; b <= upper; ++b)
    if (valid(b)) return b;
  throw DomainError("no valid base in [" + to_string(lo) + ", " + to_string(hi) + "]");
}

SynthesisResult synthesize(const Recurrence& rec, const SynthesisOptions& options) {
  const std::size_t d = rec.order();
  const SequenceWindow head = eval_oracle(rec, std::max<std::size_t>(d, 10) - 1);
  if (std::all_of(head.values.begin(), head.values.end(), [](const BigInt& v) { return v == 0; }))
    throw AllZeroSequenceError("the sequence is identically zero");

  const BigInt c = options.force_c ? *options.force_c : options.assume_nonnegative ? BigInt(0) : find_shift(rec);
  if (c < 0) throw DomainError("shift constant must be natural");
  const ShiftedProblem problem = prepare(rec, c, options.horizon);

  BoundsCertificate cert;
  cert.c = c;
  cert.c_t = weighted_growth_constant(recurrence_from_gf(problem.gf_t));
  cert.rho = problem.rho;
  std::tie(cert.b1, cert.m) = find_b1_m(cert.c_t, cert.rho);
  cert.b2 = find_b2(cert.c_t, cert.rho);
  cert.lambda = problem.growth.rate;
  cert.scale = problem.growth.scale;
  cert.base_floor = floor(problem.growth.rate) + 1;
  if (cert.base_floor < 2) cert.base_floor = 2;

  const BigInt b = options.force_b ? *options.force_b : minimal_valid_b(problem, cert.base_floor, cert.b2, options.horizon);
  cert.b = b;
  cert.m_chosen = base_certificate(problem.growth, problem.rho, b, kCertificateCap);

  SynthesisResult result{rec, term_for(problem, b), b, c, 1, false, cert, problem.gf_t};
  for (std::size_t n = 1; n <= options.horizon; ++n)
    if (!term_matches(result.term, problem.oracle, c, n))
      throw VerificationError("synthesized term disagrees with the recurrence at n = " + std::to_string(n), n);
  result.valid_at_zero = term_matches(result.term, problem.oracle, c, 0);
  return result;
}

BigInt extract_direct(const RationalFunction& f, const BigInt& b, std::size_t n) {
  const unsigned long un = n;
  const Rational x = inverse_power(b, n);
  const Rational scaled = f.evaluate(x) * Rational(ipow(b, un * un));
  BigInt r;
  const BigInt modulus = ipow(b, un);
  mpz_fdiv_r(r.get_mpz_t(), floor(scaled).get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace arterm
