#include "arterm/term.hpp"

#include "arterm/errors.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace arterm {

std::string_view op_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::add:
      return "add";
    case BinaryOp::truncsub:
      return "truncsub";
    case BinaryOp::mul:
      return "mul";
    case BinaryOp::floordiv:
      return "floordiv";
    case BinaryOp::pow:
      return "pow";
    case BinaryOp::mod:
      return "mod";
  }
  return "?";
}

Term Term::constant(BigInt value) {
  if (value < 0) throw DomainError("arithmetic-term constants are natural numbers, got " + to_string(value));
  return Term(std::make_shared<const Node>(ConstantNode{std::move(value)}));
}

Term Term::variable(std::string name) {
  if (name.empty()) throw DomainError("empty variable name");
  return Term(std::make_shared<const Node>(VariableNode{std::move(name)}));
}

Term Term::binary(BinaryOp op, Term lhs, Term rhs) {
  return Term(std::make_shared<const Node>(BinaryNode{op, std::move(lhs), std::move(rhs)}));
}

bool Term::is_constant() const noexcept { return std::holds_alternative<ConstantNode>(*node_); }
bool Term::is_variable() const noexcept { return std::holds_alternative<VariableNode>(*node_); }
bool Term::is_binary() const noexcept { return std::holds_alternative<BinaryNode>(*node_); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->index() != b.node_->index()) return false;
  if (const auto* ca = std::get_if<ConstantNode>(a.node_.get()))
    return ca->value == std::get<ConstantNode>(*b.node_).value;
  if (const auto* va = std::get_if<VariableNode>(a.node_.get()))
    return va->name == std::get<VariableNode>(*b.node_).name;
  const auto& ba = std::get<BinaryNode>(*a.node_);
  const auto& bb = std::get<BinaryNode>(*b.node_);
  return ba.op == bb.op && ba.lhs == bb.lhs && ba.rhs == bb.rhs;
}

Term operator+(Term a, Term b) { return Term::binary(BinaryOp::add, std::move(a), std::move(b)); }
Term operator*(Term a, Term b) { return Term::binary(BinaryOp::mul, std::move(a), std::move(b)); }
Term truncsub(Term a, Term b) { return Term::binary(BinaryOp::truncsub, std::move(a), std::move(b)); }
Term floordiv(Term a, Term b) { return Term::binary(BinaryOp::floordiv, std::move(a), std::move(b)); }
Term power(Term a, Term b) { return Term::binary(BinaryOp::pow, std::move(a), std::move(b)); }
Term mod(Term a, Term b) { return Term::binary(BinaryOp::mod, std::move(a), std::move(b)); }

void Evaluator::note(const BigInt& v) {
  const std::size_t bits = bit_length(v);
  if (bits > options_.bit_budget)
    throw ResourceError("intermediate value of " + std::to_string(bits) + " bits exceeds the budget of " +
                        std::to_string(options_.bit_budget) + " bits");
  peak_bits_ = std::max(peak_bits_, bits);
}

BigInt Evaluator::operator()(const Term& t, const Assignment& env) { return eval(t, env); }

BigInt Evaluator::eval(const Term& t, const Assignment& env) {
  if (const auto* c = std::get_if<ConstantNode>(&t.node())) {
    note(c->value);
    return c->value;
  }
  if (const auto* v = std::get_if<VariableNode>(&t.node())) {
    const auto it = env.find(v->name);
    if (it == env.end()) throw DomainError("unbound variable '" + v->name + "'");
    if (it->second < 0) throw DomainError("variable '" + v->name + "' bound to a negative value");
    note(it->second);
    return it->second;
  }
  const auto& b = std::get<BinaryNode>(t.node());
  const BigInt x = eval(b.lhs, env);
  const BigInt y = eval(b.rhs, env);
  BigInt r;
  switch (b.op) {
    case BinaryOp::add:
      r = x + y;
      break;
    case BinaryOp::truncsub:
      r = x > y ? BigInt(x - y) : BigInt(0);
      break;
    case BinaryOp::mul:
      if (x != 0 && y != 0 && bit_length(x) + bit_length(y) - 1 > options_.bit_budget)
        throw ResourceError("product exceeds the bit budget");
      r = x * y;
      break;
    case BinaryOp::floordiv:
      if (y == 0)
        r = 0;
      else
        mpz_fdiv_q(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      break;
    case BinaryOp::mod:
      if (y == 0)
        r = x;
      else
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      break;
    case BinaryOp::pow: {
      if (y == 0 || x == 1) {
        r = 1;
        break;
      }
      if (x == 0) {
        r = 0;
        break;
      }
      if (!y.fits_ulong_p()) throw ResourceError("exponent " + to_string(y) + " is too large");
      const unsigned long e = y.get_ui();
      // 2^((bits-1) e) <= x^e
      const std::size_t low_bits = bit_length(x) - 1;
      if (low_bits != 0 && e > (options_.bit_budget - 1) / low_bits)
        throw ResourceError("power " + to_string(x) + "^" + to_string(y) + " exceeds the bit budget");
      r = ipow(x, e);
      break;
    }
  }
  note(r);
  return r;
}

BigInt evaluate(const Term& t, const Assignment& env, const EvalOptions& options) {
  Evaluator ev(options);
  return ev(t, env);
}

namespace {

void collect_variables(const Term& t, std::set<std::string>& out) {
  if (const auto* v = std::get_if<VariableNode>(&t.node())) {
    out.insert(v->name);
  } else if (const auto* b = std::get_if<BinaryNode>(&t.node())) {
    collect_variables(b->lhs, out);
    collect_variables(b->rhs, out);
  }
}

}  // namespace

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  collect_variables(t, out);
  return out;
}

Term substitute_constant(const Term& t, const BigInt& from, const BigInt& to) {
  if (const auto* c = std::get_if<ConstantNode>(&t.node())) return c->value == from ? Term::constant(to) : t;
  if (const auto* b = std::get_if<BinaryNode>(&t.node()))
    return Term::binary(b->op, substitute_constant(b->lhs, from, to), substitute_constant(b->rhs, from, to));
  return t;
}

std::size_t size(const Term& t) {
  if (const auto* b = std::get_if<BinaryNode>(&t.node())) return 1 + size(b->lhs) + size(b->rhs);
  return 1;
}

namespace {

bool is_natural(const Polynomial& p) {
  return p.is_integral() &&
         std::all_of(p.coefficients().begin(), p.coefficients().end(), [](const Rational& c) { return c >= 0; });
}

// k * n, with the trivial factors dropped.
Term scaled_n(unsigned long k) {
  Term n = Term::variable("n");
  return k == 1 ? n : Term::constant(BigInt(k)) * n;
}

// Monomial coefficient * b^exponent, dropping a unit coefficient.
Term monomial(const BigInt& coefficient, const Term& b, const Term& exponent) {
  Term p = power(b, exponent);
  return coefficient == 1 ? p : Term::constant(coefficient) * p;
}

std::optional<Term> sum(std::optional<Term> acc, Term next) {
  return acc ? std::optional<Term>(*acc + std::move(next)) : std::optional<Term>(std::move(next));
}

// Numerator block: sum over i of c_i * b^(n^2 + (h-i) n), i ascending.
std::optional<Term> numerator_block(const Polynomial& p, int h, const Term& b) {
  std::optional<Term> acc;
  const Term n2 = power(Term::variable("n"), Term::constant(2));
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    const auto k = static_cast<unsigned long>(h - static_cast<int>(i));
    acc = sum(std::move(acc), monomial(c.get_num(), b, n2 + scaled_n(k)));
  }
  return acc;
}

// Denominator block: sum over i of c_i * b^((h-i) n).
std::optional<Term> denominator_block(const Polynomial& p, int h, const Term& b) {
  std::optional<Term> acc;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    const auto k = static_cast<unsigned long>(h - static_cast<int>(i));
    acc = sum(std::move(acc), k == 0 ? Term::constant(c.get_num()) : monomial(c.get_num(), b, scaled_n(k)));
  }
  return acc;
}

Term difference(std::optional<Term> plus, std::optional<Term> minus) {
  Term p = plus ? *plus : Term::constant(0);
  return minus ? truncsub(std::move(p), std::move(*minus)) : p;
}

}  // namespace

Term build_E(const Polynomial& a_plus, const Polynomial& a_minus, const Polynomial& b_plus,
             const Polynomial& b_minus, int h, const BigInt& b) {
  if (b < 2) throw DomainError("extraction base must be at least 2");
  if (!is_natural(a_plus) || !is_natural(a_minus) || !is_natural(b_plus) || !is_natural(b_minus))
    throw DomainError("build_E expects polynomials with natural coefficients");
  if (h < 1 || (b_plus - b_minus).degree() != h)
    throw DomainError("h must equal deg(B+ - B-) and be positive");
  if (b_plus.degree() > h || b_minus.degree() > h)
    throw DomainError("denominator blocks exceed degree h");
  if (a_plus.degree() >= h || a_minus.degree() >= h) throw DomainError("numerator degree must be below h");

  const Term base = Term::constant(b);
  Term num = difference(numerator_block(a_plus, h, base), numerator_block(a_minus, h, base));
  Term den = difference(denominator_block(b_plus, h, base), denominator_block(b_minus, h, base));
  return mod(floordiv(std::move(num), std::move(den)), power(base, Term::variable("n")));
}

}  // namespace arterm
