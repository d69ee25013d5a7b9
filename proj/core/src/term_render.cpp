#include "arterm/errors.hpp"
#include "arterm/term.hpp"

namespace arterm {

namespace {

// Binding strength as seen from a parent; floor division always renders as a
// bracketed group, so it binds like an atom.
int precedence(const Term& t) {
  const auto* b = std::get_if<BinaryNode>(&t.node());
  if (b == nullptr) return 5;
  switch (b->op) {
    case BinaryOp::mod:
      return 1;
    case BinaryOp::add:
    case BinaryOp::truncsub:
      return 2;
    case BinaryOp::mul:
      return 3;
    case BinaryOp::pow:
      return 4;
    case BinaryOp::floordiv:
      return 5;
  }
  return 5;
}

std::string text(const Term& t, bool compact);

std::string text_operand(const Term& t, bool parens, bool compact) {
  const std::string s = text(t, compact);
  return parens ? "(" + s + ")" : s;
}

std::string text(const Term& t, bool compact) {
  if (const auto* c = std::get_if<ConstantNode>(&t.node())) return to_string(c->value);
  if (const auto* v = std::get_if<VariableNode>(&t.node())) return v->name;
  const auto& b = std::get<BinaryNode>(t.node());
  const std::string sp = compact ? "" : " ";
  switch (b.op) {
    case BinaryOp::floordiv:
      return "fl(" + text_operand(b.lhs, precedence(b.lhs) < 3, compact) + sp + "/" + sp +
             text_operand(b.rhs, precedence(b.rhs) <= 3, compact) + ")";
    case BinaryOp::pow:
      return text_operand(b.lhs, precedence(b.lhs) <= 4, compact) + "^" +
             text_operand(b.rhs, precedence(b.rhs) < 4, true);
    default:
      break;
  }
  const int p = precedence(t);
  std::string op;
  switch (b.op) {
    case BinaryOp::add:
      op = sp + "+" + sp;
      break;
    case BinaryOp::truncsub:
      op = sp + "-." + sp;
      break;
    case BinaryOp::mul:
      op = "*";
      break;
    default:
      op = sp + "%" + sp;
      break;
  }
  return text_operand(b.lhs, precedence(b.lhs) < p, compact) + op + text_operand(b.rhs, precedence(b.rhs) <= p, compact);
}

std::string latex(const Term& t);

std::string latex_operand(const Term& t, bool parens) {
  const std::string s = latex(t);
  return parens ? "(" + s + ")" : s;
}

std::string latex(const Term& t) {
  if (const auto* c = std::get_if<ConstantNode>(&t.node())) return to_string(c->value);
  if (const auto* v = std::get_if<VariableNode>(&t.node())) return v->name;
  const auto& b = std::get<BinaryNode>(t.node());
  const int p = precedence(t);
  switch (b.op) {
    case BinaryOp::floordiv:
      return "\\left\\lfloor \\frac{" + latex(b.lhs) + "}{" + latex(b.rhs) + "} \\right\\rfloor";
    case BinaryOp::pow: {
      const std::string exponent = latex(b.rhs);
      return latex_operand(b.lhs, precedence(b.lhs) <= 4) + "^" +
             (exponent.size() == 1 ? exponent : "{" + exponent + "}");
    }
    case BinaryOp::mul: {
      const std::string lhs = latex_operand(b.lhs, precedence(b.lhs) < p);
      if (b.lhs.is_constant() && b.rhs.is_variable()) return lhs + latex(b.rhs);
      return lhs + " \\cdot " + latex_operand(b.rhs, precedence(b.rhs) <= p);
    }
    case BinaryOp::add:
      return latex_operand(b.lhs, precedence(b.lhs) < p) + "+" + latex_operand(b.rhs, precedence(b.rhs) <= p);
    case BinaryOp::truncsub:
      return latex_operand(b.lhs, precedence(b.lhs) < p) + " \\dotdiv " +
             latex_operand(b.rhs, precedence(b.rhs) <= p);
    case BinaryOp::mod:
      return latex_operand(b.lhs, precedence(b.lhs) < p) + " \\bmod " +
             latex_operand(b.rhs, precedence(b.rhs) <= p);
  }
  return {};
}

BinaryOp op_from_name(const std::string& name) {
  for (BinaryOp op : {BinaryOp::add, BinaryOp::truncsub, BinaryOp::mul, BinaryOp::floordiv, BinaryOp::pow,
                      BinaryOp::mod})
    if (op_name(op) == name) return op;
  throw ParseError("unknown operator '" + name + "'", 0);
}

}  // namespace

std::string render(const Term& t, TermFormat format) {
  switch (format) {
    case TermFormat::text:
      return text(t, false);
    case TermFormat::latex:
      return latex(t);
    case TermFormat::json:
      return to_json(t).dump();
  }
  return {};
}

nlohmann::json to_json(const Term& t) {
  if (const auto* c = std::get_if<ConstantNode>(&t.node())) return {{"const", to_string(c->value)}};
  if (const auto* v = std::get_if<VariableNode>(&t.node())) return {{"var", v->name}};
  const auto& b = std::get<BinaryNode>(t.node());
  return {{"op", std::string(op_name(b.op))}, {"args", nlohmann::json::array({to_json(b.lhs), to_json(b.rhs)})}};
}

Term term_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("term JSON must be an object", 0);
  try {
    if (j.contains("const")) {
      const auto& c = j.at("const");
      if (c.is_number_unsigned()) return Term::constant(BigInt(c.get<unsigned long>()));
      const BigInt value = parse_bigint(c.get<std::string>());
      if (value < 0) throw ParseError("negative constant in term JSON", 0);
      return Term::constant(value);
    }
    if (j.contains("var")) return Term::variable(j.at("var").get<std::string>());
    const auto& args = j.at("args");
    if (!args.is_array() || args.size() != 2) throw ParseError("operator nodes take exactly two args", 0);
    return Term::binary(op_from_name(j.at("op").get<std::string>()), term_from_json(args[0]),
                        term_from_json(args[1]));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed term JSON: ") + e.what(), 0);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace arterm
