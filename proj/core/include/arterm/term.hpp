#pragma once

// Arithmetic terms: natural constants and variables closed under
// x + y, x -. y (truncated), x * y, floor(x / y), x ^ y and x mod y.

#include "arterm/algebra.hpp"
#include "arterm/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace arterm {

enum class BinaryOp { add, truncsub, mul, floordiv, pow, mod };

std::string_view op_name(BinaryOp op);

struct ConstantNode;
struct VariableNode;
struct BinaryNode;

/// Immutable, shared AST handle. Copies are cheap and share structure.
class Term {
 public:
  using Node = std::variant<ConstantNode, VariableNode, BinaryNode>;

  /// Throws DomainError for a negative value.
  static Term constant(BigInt value);
  static Term variable(std::string name);
  static Term binary(BinaryOp op, Term lhs, Term rhs);

  const Node& node() const noexcept;

  bool is_constant() const noexcept;
  bool is_variable() const noexcept;
  bool is_binary() const noexcept;

  /// Structural equality.
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ConstantNode {
  BigInt value;
};

struct VariableNode {
  std::string name;
};

struct BinaryNode {
  BinaryOp op;
  Term lhs;
  Term rhs;
};

inline const Term::Node& Term::node() const noexcept { return *node_; }

Term operator+(Term a, Term b);
Term operator*(Term a, Term b);
Term truncsub(Term a, Term b);
Term floordiv(Term a, Term b);
Term power(Term a, Term b);
Term mod(Term a, Term b);

/// Variable values; every variable of an evaluated term must be bound.
using Assignment = std::map<std::string, BigInt, std::less<>>;

struct EvalOptions {
  /// Largest admissible bit length of any intermediate value.
  std::size_t bit_budget = std::size_t{1} << 26;
};

/// Evaluates terms under 0^0 = 1, floor(x / 0) = 0, x mod 0 = x and
/// x -. y = max(x - y, 0). Records the largest bit length it produced.
class Evaluator {
 public:
  explicit Evaluator(EvalOptions options = {}) : options_(options) {}

  /// Throws DomainError on an unbound variable and ResourceError when an
  /// intermediate value would exceed the bit budget.
  BigInt operator()(const Term& t, const Assignment& env);

  std::size_t peak_bits() const noexcept { return peak_bits_; }

 private:
  BigInt eval(const Term& t, const Assignment& env);
  void note(const BigInt& v);

  EvalOptions options_;
  std::size_t peak_bits_ = 0;
};

BigInt evaluate(const Term& t, const Assignment& env, const EvalOptions& options = {});

std::set<std::string> variables(const Term& t);

/// Replaces every constant equal to `from` by `to`.
Term substitute_constant(const Term& t, const BigInt& from, const BigInt& to);

/// Number of nodes.
std::size_t size(const Term& t);

// Text grammar (whitespace insignificant):
//   expr   := sum ('%' sum)*
//   sum    := prod (('+' | '-.') prod)*
//   prod   := power (('*' | '/') power)*
//   power  := atom ('^' power)?
//   atom   := natural | identifier | '(' expr ')' | 'fl' '(' expr ')'
// '/' is floor division and 'fl(...)' is an optional grouping that marks it.

/// Throws ParseError carrying the offending position.
Term parse(std::string_view source);

enum class TermFormat { text, latex, json };

std::string render(const Term& t, TermFormat format = TermFormat::text);

nlohmann::json to_json(const Term& t);
/// Throws ParseError (position 0) on malformed input.
Term term_from_json(const nlohmann::json& j);

/// The extraction term
///   floor((b^(n^2+hn) A+(b^-n) -. b^(n^2+hn) A-(b^-n)) /
///         (b^(hn) B+(b^-n) -. b^(hn) B-(b^-n))) mod b^n
/// in the variable n, with every block expanded into natural monomials
/// a_i * b^(n^2+(h-i)n) and b_i * b^((h-i)n). Throws DomainError unless all
/// polynomials are natural, h = deg(B+ - B-), deg(A+ - A-) < h and b >= 2.
Term build_E(const Polynomial& a_plus, const Polynomial& a_minus, const Polynomial& b_plus,
             const Polynomial& b_minus, int h, const BigInt& b);

}  // namespace arterm
