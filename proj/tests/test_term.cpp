#include "arterm/errors.hpp"
#include "arterm/term.hpp"

#include <doctest.h>

#include <random>

using namespace arterm;

namespace {

const char* const kFibonacci = "fl(3^(n^2+n) / (3^(2*n) -. (3^n + 1))) % 3^n";

BigInt at(const Term& t, long n) { return evaluate(t, {{"n", BigInt(n)}}); }
BigInt eval_text(const char* src) { return evaluate(parse(src), {}); }

Term random_term(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int k = depth <= 0 ? pick(rng) % 3 : pick(rng);
  if (k == 0) return Term::variable("n");
  if (k == 1) return Term::variable(pick(rng) % 2 ? "x" : "y_1");
  if (k == 2) return Term::constant(BigInt(std::uniform_int_distribution<long>(0, 1000)(rng)));
  const BinaryOp ops[] = {BinaryOp::add, BinaryOp::truncsub, BinaryOp::mul,
                          BinaryOp::floordiv, BinaryOp::pow, BinaryOp::mod};
  return Term::binary(ops[pick(rng) % 6], random_term(rng, depth - 1), random_term(rng, depth - 1));
}

}  // namespace

TEST_CASE("evaluation conventions") {
  CHECK(eval_text("0^0") == 1);
  CHECK(eval_text("5 / 0") == 0);
  CHECK(eval_text("7 % 0") == 7);
  CHECK(eval_text("9 % 1") == 0);
  CHECK(eval_text("3 -. 5") == 0);
  CHECK(eval_text("5 -. 3") == 2);
  CHECK(eval_text("0^5") == 0);
  CHECK(eval_text("17 / 5") == 3);
  CHECK(eval_text("17 % 5") == 2);
  CHECK(eval_text("2^3^2") == 512);
  CHECK(eval_text("2^100") == BigInt("1267650600228229401496703205376"));
}

TEST_CASE("Fibonacci term") {
  const Term t = parse(kFibonacci);
  CHECK(at(t, 0) == 0);
  CHECK(at(t, 10) == 55);
  const long fib[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (long n = 0; n < 12; ++n) CHECK(at(t, n) == fib[n]);
}

TEST_CASE("unbound variables and budgets") {
  CHECK_THROWS_AS(evaluate(parse("n + 1"), {}), DomainError);
  CHECK_THROWS_AS(evaluate(parse("2^(2^40)"), {}), ResourceError);
  EvalOptions small;
  small.bit_budget = 64;
  CHECK_THROWS_AS(evaluate(parse("2^65"), {}, small), ResourceError);
  CHECK(evaluate(parse("2^62"), {}, small) == ipow(BigInt(2), 62));
  CHECK(evaluate(parse("1^(10^30)"), {}) == 1);
  CHECK(evaluate(parse("0^(10^30)"), {}) == 0);
}

TEST_CASE("peak bits") {
  Evaluator eval;
  eval(parse("2^100 / 2^99"), {});
  CHECK(eval.peak_bits() == 101);
}

TEST_CASE("parse structure") {
  CHECK(parse("0^0") == Term::binary(BinaryOp::pow, Term::constant(0), Term::constant(0)));
  CHECK(parse("2^(n^2)") == power(Term::constant(2), power(Term::variable("n"), Term::constant(2))));
  CHECK(parse("2^n^2") == parse("2^(n^2)"));
  CHECK(parse("1 + 2 * 3") == Term::constant(1) + Term::constant(2) * Term::constant(3));
  CHECK(parse("8 -. 2 -. 1") == truncsub(truncsub(Term::constant(8), Term::constant(2)), Term::constant(1)));
  CHECK(parse("fl(a / b)") == parse("a / b"));
  CHECK(parse("a % b % c") == mod(mod(Term::variable("a"), Term::variable("b")), Term::variable("c")));
  CHECK(parse("  n\t+\n1 ") == Term::variable("n") + Term::constant(1));
}

TEST_CASE("parse errors carry positions") {
  const auto position = [](const char* src) -> long {
    try {
      parse(src);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("3 + -2") == 4);
  CHECK(position("3 - 2") == 2);
  CHECK(position("(1 + 2") == 6);
  CHECK(position("1 + ") == 4);
  CHECK(position("1 2") == 2);
  CHECK(position("") == 0);
  CHECK(position("1 $ 2") == 2);
}

TEST_CASE("render text") {
  CHECK(render(parse(kFibonacci)) == kFibonacci);
  CHECK(render(Term::constant(55)) == "55");
  CHECK(render(parse("(1 + 2) * 3")) == "(1 + 2)*3");
  CHECK(render(parse("1 -. (2 -. 3)")) == "1 -. (2 -. 3)");
  CHECK(render(parse("(2^3)^4")) == "(2^3)^4");
  CHECK(render(parse("2^(3+4)")) == "2^(3+4)");
  CHECK(render(parse("(a % b) + c")) == "(a % b) + c");
}

TEST_CASE("render latex") {
  CHECK(render(parse(kFibonacci), TermFormat::latex) ==
        "\\left\\lfloor \\frac{3^{n^2+n}}{3^{2n} \\dotdiv (3^n+1)} \\right\\rfloor \\bmod 3^n");
}

TEST_CASE("json round trip") {
  const Term t = parse(kFibonacci);
  CHECK(term_from_json(to_json(t)) == t);
  CHECK(to_json(Term::constant(55)).dump() == R"({"const":"55"})");
  CHECK(to_json(parse("n + 1")).dump() == R"({"args":[{"var":"n"},{"const":"1"}],"op":"add"})");
  CHECK_THROWS_AS(term_from_json(nlohmann::json::parse(R"({"op":"xor","args":[{"const":"1"},{"const":"1"}]})")),
                  ParseError);
  CHECK_THROWS_AS(term_from_json(nlohmann::json::parse(R"({"const":"-1"})")), ParseError);
}

TEST_CASE("helpers") {
  const Term t = parse(kFibonacci);
  CHECK(variables(t) == std::set<std::string>{"n"});
  CHECK(size(parse("n + 1")) == 3);
  CHECK(substitute_constant(t, 3, 5) == parse("fl(5^(n^2+n) / (5^(2*n) -. (5^n + 1))) % 5^n"));
  CHECK_THROWS_AS(Term::constant(-1), DomainError);
}

TEST_CASE("build_E") {
  const Polynomial zero;
  CHECK(build_E(Polynomial{0, 1}, zero, Polynomial{1}, Polynomial{0, 1, 1}, 2, 3) == parse(kFibonacci));
  CHECK(render(build_E(Polynomial{2}, Polynomial{0, 1}, Polynomial{1}, Polynomial{0, 1, 1}, 2, 5)) ==
        "fl((2*5^(n^2+2*n) -. 5^(n^2+n)) / (5^(2*n) -. (5^n + 1))) % 5^n");
  // Pell x(n), k = 7: (1 - 8z) / (1 - 16z + z^2).
  const Term pell = build_E(Polynomial{1}, Polynomial{0, 8}, Polynomial{1, 0, 1}, Polynomial{0, 16}, 2, 143);
  CHECK(render(pell) == "fl((143^(n^2+2*n) -. 8*143^(n^2+n)) / (143^(2*n) + 1 -. 16*143^n)) % 143^n");
  const long x[] = {1, 8, 127, 2024, 32257};
  for (long n = 1; n < 5; ++n) CHECK(at(pell, n) == x[n]);

  CHECK_THROWS_AS(build_E(Polynomial{0, 1}, zero, Polynomial{1}, Polynomial{0, 1, 1}, 2, 1), DomainError);
  CHECK_THROWS_AS(build_E(Polynomial{0, 1}, zero, Polynomial{1}, Polynomial{0, 1, 1}, 3, 3), DomainError);
  CHECK_THROWS_AS(build_E(Polynomial{0, 0, 1}, zero, Polynomial{1}, Polynomial{0, 1, 1}, 2, 3), DomainError);
  CHECK_THROWS_AS(build_E(Polynomial{0, -1}, zero, Polynomial{1}, Polynomial{0, 1, 1}, 2, 3), DomainError);
}

TEST_CASE("property: parse(render(t)) == t") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const Term t = random_term(rng, 5);
    CHECK(parse(render(t)) == t);
    CHECK(term_from_json(nlohmann::json::parse(render(t, TermFormat::json))) == t);
  }
}

TEST_CASE("property: evaluator agrees with direct arithmetic") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> small(0, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const long a = small(rng), b = small(rng), e = small(rng) % 7;
    const Assignment env{{"a", BigInt(a)}, {"b", BigInt(b)}, {"e", BigInt(e)}};
    CHECK(evaluate(parse("a + b"), env) == a + b);
    CHECK(evaluate(parse("a -. b"), env) == std::max(a - b, 0L));
    CHECK(evaluate(parse("a * b"), env) == a * b);
    CHECK(evaluate(parse("a / b"), env) == (b == 0 ? 0 : a / b));
    CHECK(evaluate(parse("a % b"), env) == (b == 0 ? a : a % b));
    CHECK(evaluate(parse("a ^ e"), env) == ipow(BigInt(a), static_cast<unsigned long>(e)));
  }
}
