#include "arterm/catalog.hpp"

#include "arterm/errors.hpp"

#include <algorithm>

namespace arterm {

Recurrence lucas(const LucasParams& p, LucasKind kind) {
  if (p.Q == 0) throw DomainError("Lucas parameter Q must be nonzero");
  std::vector<Rational> coeffs{Rational(-p.P), Rational(p.Q)};
  if (kind == LucasKind::U) return Recurrence(std::move(coeffs), {BigInt(0), BigInt(1)});
  return Recurrence(std::move(coeffs), {BigInt(2), p.P});
}

Recurrence lucas_U(const LucasParams& p) { return lucas(p, LucasKind::U); }
Recurrence lucas_V(const LucasParams& p) { return lucas(p, LucasKind::V); }

RationalFunction lucas_gf(const LucasParams& p, LucasKind kind) {
  if (p.Q == 0) throw DomainError("Lucas parameter Q must be nonzero");
  const Polynomial den({Rational(1), Rational(-p.P), Rational(p.Q)});
  const Polynomial num =
      kind == LucasKind::U ? Polynomial::monomial(1, 1) : Polynomial({Rational(2), Rational(-p.P)});
  return RationalFunction(num, den);
}

namespace {

// x + y g with g^2 = disc.
struct Quadratic {
  BigInt x;
  BigInt y;
};

Quadratic multiply(const Quadratic& a, const Quadratic& b, const BigInt& disc) {
  return {a.x * b.x + a.y * b.y * disc, a.x * b.y + a.y * b.x};
}

Quadratic power(Quadratic base, std::size_t n, const BigInt& disc) {
  Quadratic acc{1, 0};
  while (n > 0) {
    if (n & 1U) acc = multiply(acc, base, disc);
    base = multiply(base, base, disc);
    n >>= 1U;
  }
  return acc;
}

}  // namespace

BigInt lucas_closed_form_oracle(const LucasParams& p, LucasKind kind, std::size_t n) {
  if (p.Q == 0) throw DomainError("Lucas parameter Q must be nonzero");
  const BigInt disc = p.P * p.P - 4 * p.Q;
  const auto un = static_cast<unsigned long>(n);
  if (disc == 0) {
    // alpha = beta = P/2
    const Rational half = make_rational(p.P, 2);
    if (kind == LucasKind::V) return to_integer(Rational(2 * ipow(half, un)));
    if (n == 0) return 0;
    return to_integer(Rational(Rational(BigInt(un)) * ipow(half, un - 1)));
  }
  // (P + g)^n = X + Y g and (P - g)^n = X - Y g.
  const Quadratic q = power({p.P, 1}, n, disc);
  const BigInt twice = kind == LucasKind::U ? BigInt(2 * q.y) : BigInt(2 * q.x);
  return to_integer(make_rational(twice, ipow(BigInt(2), un)));
}

namespace {

bool is_square(const BigInt& k) { return k >= 0 && mpz_perfect_square_p(k.get_mpz_t()) != 0; }

}  // namespace

std::pair<BigInt, BigInt> pell_fundamental(const BigInt& k) {
  if (k < 2 || is_square(k)) throw DomainError("Pell parameter must be a nonsquare integer >= 2");
  BigInt a0;
  mpz_sqrt(a0.get_mpz_t(), k.get_mpz_t());
  // sqrt(k) = [a0; a1, a2, ...] with (m, d, a) the usual recurrence.
  BigInt m = 0, d = 1, a = a0;
  BigInt h_prev = 1, h = a0;
  BigInt q_prev = 0, q = 1;
  while (h * h - k * q * q != 1) {
    m = d * a - m;
    d = (k - m * m) / d;
    a = (a0 + m) / d;
    BigInt h_next = a * h + h_prev;
    BigInt q_next = a * q + q_prev;
    h_prev = std::move(h);
    q_prev = std::move(q);
    h = std::move(h_next);
    q = std::move(q_next);
  }
  return {h, q};
}

std::optional<std::pair<BigInt, BigInt>> pell_fundamental_brute_force(const BigInt& k, unsigned long y_limit) {
  for (unsigned long y = 1; y <= y_limit; ++y) {
    const BigInt x2 = 1 + k * y * y;
    if (is_square(x2)) {
      BigInt x;
      mpz_sqrt(x.get_mpz_t(), x2.get_mpz_t());
      return std::make_pair(x, BigInt(y));
    }
  }
  return std::nullopt;
}

std::pair<Recurrence, Recurrence> pell_recurrences(const BigInt& k) {
  const auto [x1, y1] = pell_fundamental(k);
  std::vector<Rational> coeffs{Rational(-2 * x1), Rational(1)};
  return {Recurrence(coeffs, {BigInt(1), x1}), Recurrence(coeffs, {BigInt(0), y1})};
}

Recurrence fibonacci_convolution(unsigned r) {
  const RationalFunction fib(Polynomial({0, 1}), Polynomial({1, -1, -1}));
  return recurrence_from_gf(fib.pow(r + 1));
}

BigInt fibonacci_binomial_oracle(std::size_t n) {
  if (n == 0) return 0;
  BigInt sum = 0;
  BigInt five_k = 1;
  BigInt binom;
  for (unsigned long k = 0; 2 * k + 1 <= n; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), n, 2 * k + 1);
    sum += five_k * binom;
    five_k *= 5;
  }
  return to_integer(make_rational(sum, ipow(BigInt(2), n - 1)));
}

namespace {

Recurrence rec(std::vector<long> coeffs, std::vector<long> init) {
  std::vector<Rational> a(coeffs.begin(), coeffs.end());
  std::vector<BigInt> s(init.begin(), init.end());
  return Recurrence(std::move(a), std::move(s));
}

Fixture make(std::string id, std::string name, Recurrence r, long b, long c, std::string_view term,
             std::size_t valid_from, std::string notes = {}) {
  return Fixture{std::move(id), std::move(name), std::move(r), BigInt(b), BigInt(c), parse(term),
                 valid_from, std::move(notes), std::nullopt};
}

std::string convolution_term(unsigned r, unsigned b) {
  const std::string base = std::to_string(b);
  return "fl(" + base + "^(n^2+" + std::to_string(r + 1) + "*n) / (" + base + "^(2*n) -. (" + base + "^n + 1))^" +
         std::to_string(r + 1) + ") % " + base + "^n";
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;
  const Recurrence fib = lucas_U({1, -1});
  out.push_back(make("A000045", "Fibonacci numbers", fib, 3, 0,
                     "fl(3^(n^2+n) / (3^(2*n) -. (3^n + 1))) % 3^n", 0));
  out.push_back(make("A000045-b2", "Fibonacci numbers, base 2", fib, 2, 0,
                     "fl(2^(n^2+n) / (2^(2*n) -. (2^n + 1))) % 2^n", 2,
                     "base 2 fails at n = 1"));
  out.push_back(make("A000032", "Lucas numbers", lucas_V({1, -1}), 5, 0,
                     "2*(1 -. n) + (fl((2*5^(n^2+2*n) -. 5^(n^2+n)) / (5^(2*n) -. (5^n + 1))) % 5^n)", 0,
                     "2(1 -. n) patches n = 0"));
  out.push_back(make("A000129", "Pell numbers U(2,-1)", lucas_U({2, -1}), 3, 0,
                     "fl(3^(n^2+n) / (3^(2*n) -. (2*3^n + 1))) % 3^n", 0));
  out.push_back(make("A002203", "companion Pell numbers V(2,-1)", lucas_V({2, -1}), 9, 0,
                     "fl((2*9^(n^2+2*n) -. 2*9^(n^2+n)) / (9^(2*n) -. (2*9^n + 1))) % 9^n", 1));
  out.push_back(make("A001477", "natural numbers U(2,1)", lucas_U({2, 1}), 4, 0,
                     "fl(2^(2*n^2+2*n) / (2^(4*n) + 1 -. 2^(2*n+1))) % 2^(2*n)", 0));
  out.push_back(make("A007395", "constant 2, V(2,1)", lucas_V({2, 1}), 4, 0,
                     "fl(2^(2*n^2+2*n+1) / (2^(2*n) -. 1)) % 2^(2*n)", 1,
                     "OEIS indexes this sequence from 1; the fixture keeps the 0-based recurrence"));
  out.push_back(make("A001045", "Jacobsthal numbers U(1,-2)", lucas_U({1, -2}), 4, 0,
                     "fl(4^(n^2+n) / (4^(2*n) -. (4^n + 2))) % 4^n", 0));
  out.push_back(make("A014551", "Jacobsthal-Lucas numbers V(1,-2)", lucas_V({1, -2}), 7, 0,
                     "fl((2*7^(n^2+2*n) -. 7^(n^2+n)) / (7^(2*n) -. (7^n + 2))) % 7^n", 1));
  out.push_back(make("A000225", "2^n - 1, U(3,2)", lucas_U({3, 2}), 6, 0,
                     "fl(6^(n^2+n) / (6^(2*n) + 2 -. 3*6^n)) % 6^n", 0));
  out.push_back(make("A000051", "2^n + 1, V(3,2)", lucas_V({3, 2}), 7, 0,
                     "fl((2*7^(n^2+2*n) -. 3*7^(n^2+n)) / (7^(2*n) + 2 -. 3*7^n)) % 7^n", 1));
  out.push_back(make("A088137", "U(2,3)", lucas_U({2, 3}), 32, 3,
                     "fl((3*32^(n^2+3*n) + 6*32^(n^2+n) -. 5*32^(n^2+2*n)) / "
                     "(32^(3*n) + 9*32^n -. (5*32^(2*n) + 9))) % 32^n",
                     1, "takes negative values; shifted by 3^(n+1)"));
  out.push_back(make("A002249", "V(1,2)", lucas_V({1, 2}), 8, 2,
                     "fl((4*8^(n^2+3*n) + 6*8^(n^2+n) -. 7*8^(n^2+2*n)) / "
                     "(8^(3*n) + 4*8^n -. (3*8^(2*n) + 4))) % 8^n",
                     1, "takes negative values; shifted by 2^(n+1)"));
  const auto [pell_x, pell_y] = pell_recurrences(7);
  out.push_back(make("A001081", "Pell equation k = 7, x(n)", pell_x, 143, 0,
                     "fl((143^(n^2+2*n) -. 8*143^(n^2+n)) / (143^(2*n) + 1 -. 16*143^n)) % 143^n", 1,
                     "fundamental solution (8, 3)"));
  out.push_back(make("A001080", "Pell equation k = 7, y(n)", pell_y, 64, 0,
                     "fl(3*2^(6*n^2+6*n) / (2^(12*n) + 1 -. 2^(6*n+4))) % 2^(6*n)", 0,
                     "base 64 written as 2^6"));
  out.push_back(make("A000073", "Tribonacci numbers", rec({-1, -1, -1}, {0, 0, 1}), 2, 0,
                     "fl(2^(n^2+n) / (2^(3*n) -. (2^(2*n) + 2^n + 1))) % 2^n", 0));
  out.push_back(make("A000931", "Padovan sequence", rec({0, -1, -1}, {1, 0, 0}), 2, 0,
                     "fl((2^(n^2+3*n) -. 2^(n^2+n)) / (2^(3*n) -. (2^n + 1))) % 2^n", 1));
  out.push_back(make("A000930", "Narayana's cows sequence", rec({-1, 0, -1}, {1, 1, 1}), 2, 0,
                     "fl(2^(n^2+3*n) / (2^(3*n) -. (2^(2*n) + 1))) % 2^n", 1));
  const std::pair<unsigned, unsigned> convolutions[] = {{1, 4}, {2, 2}, {3, 3}, {4, 3}};
  for (const auto& [r, b] : convolutions) {
    out.push_back(make("fibconv-" + std::to_string(r), "Fibonacci convolution r = " + std::to_string(r),
                       fibonacci_convolution(r), b, 0, convolution_term(r, b), 0,
                       r == 1 ? "A001629" : ""));
  }
  Fixture a103469 = make("A103469", "y(n) = floor(n/2) - floor((n+1)/6) + 1",
                         rec({-1, 0, 0, 0, 0, -1, 1}, {1, 1, 2, 2, 3, 2, 3}), 2, 0,
                         "fl((2^(n^2+5*n-.6) + 2^(n^2+4*n-.5) + 2^(n^2+2*n-.3) + 2^(n^2-.1) -. "
                         "(2^(n^2+n-.2) + 2^(n^2-.n))) / (2^(7*n-.7) + 1 -. (2^(6*n-.6) + 2^(n-.1)))) % 2^(n-.1)",
                         3, "verification only; the term is written for the 1-indexed sequence");
  a103469.alternate_term = parse("fl(n / 2) + 1 -. fl((n + 1) / 6)");
  out.push_back(std::move(a103469));
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build_fixtures();
  return all;
}

const Fixture& fixture(std::string_view id) {
  const auto& all = fixtures();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.id == id; });
  if (it == all.end()) throw DomainError("unknown fixture '" + std::string(id) + "'");
  return *it;
}

}  // namespace arterm
