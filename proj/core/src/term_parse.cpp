#include "arterm/errors.hpp"
#include "arterm/term.hpp"

#include <cctype>

namespace arterm {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Term parse_all() {
    Term t = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(std::string_view token) {
    skip_space();
    if (src_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (!accept(std::string_view(&c, 1))) fail(std::string("expected '") + c + "'");
  }

  Term expr() {
    Term lhs = sum();
    while (accept("%")) lhs = mod(std::move(lhs), sum());
    return lhs;
  }

  Term sum() {
    Term lhs = product();
    for (;;) {
      if (accept("+")) {
        lhs = std::move(lhs) + product();
      } else if (peek() == '-') {
        if (!accept("-.")) fail("expected '-.' (truncated subtraction)");
        lhs = truncsub(std::move(lhs), product());
      } else {
        return lhs;
      }
    }
  }

  Term product() {
    Term lhs = power_expr();
    for (;;) {
      if (accept("*"))
        lhs = std::move(lhs) * power_expr();
      else if (accept("/"))
        lhs = floordiv(std::move(lhs), power_expr());
      else
        return lhs;
    }
  }

  Term power_expr() {
    Term base = atom();
    if (accept("^")) return power(std::move(base), power_expr());
    return base;
  }

  Term atom() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '-') {
      if (pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))
        fail("negative literals are not arithmetic terms");
      fail("unexpected '-'");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return Term::constant(BigInt(std::string(src_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == "fl" && peek() == '(') {
        expect('(');
        Term inner = expr();
        expect(')');
        return inner;
      }
      return Term::variable(std::move(name));
    }
    if (accept("(")) {
      Term inner = expr();
      expect(')');
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse(std::string_view source) { return Parser(source).parse_all(); }

}  // namespace arterm
