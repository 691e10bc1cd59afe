#include "discstab/frontend/expr.hpp"

#include <cctype>
#include <utility>

#include "discstab/cert.hpp"

namespace discstab::frontend {

namespace {

std::string describe(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = expr();
    skip_space();
    if (pos_ < text_.size()) {
      fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"}, "unexpected character");
    }
    return e;
  }

 private:
  Expr expr() {
    Expr lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = binary(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), term());
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = binary(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, std::move(lhs), factor());
    }
  }

  Expr factor() {
    if (peek() == '-') {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.args.push_back(factor());
      return e;
    }
    Expr b = base();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail({"nonnegative integer exponent"}, "bad exponent");
    if (pos_ - start > 4 || std::stoul(std::string(text_.substr(start, pos_ - start))) > kMaxExponent) {
      pos_ = start;
      fail({"exponent at most " + std::to_string(kMaxExponent)}, "exponent too large");
    }
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.exponent = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr base() {
    const char c = peek();
    if (c == 'z') {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Var;
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (peek() != ')') fail({"')'", "'+'", "'-'", "'*'", "'/'", "'^'"}, "unbalanced parenthesis");
      ++pos_;
      return e;
    }
    if (is_digit(c) || c == '.') return number();
    fail({"number", "'z'", "'('", "'-'"}, c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  Expr number() {
    const std::size_t start = pos_;
    std::size_t digits = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_, ++digits;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_, ++digits;
    }
    if (digits == 0) {
      pos_ = start;
      fail({"number"}, "lone decimal point");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p >= text_.size() || !is_digit(text_[p])) {
        pos_ = p;
        fail({"exponent digits"}, "malformed number");
      }
      while (p < text_.size() && is_digit(text_[p])) ++p;
      pos_ = p;
    }
    Expr e;
    e.kind = Expr::Kind::Number;
    e.value = parse_rational(text_.substr(start, pos_ - start));
    return e;
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) {
    throw ParseError(pos_, std::move(expected), detail);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail)
    : Error(ErrorKind::ParseError,
            detail + " at position " + std::to_string(position) + "; expected " + describe(expected)),
      position_(position),
      expected_(std::move(expected)) {}

Expr parse(std::string_view text) { return Parser(text).run(); }

DiscElement elaborate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return DiscElement::constant(e.value);
    case Expr::Kind::Var:
      return DiscElement::z();
    case Expr::Kind::Add:
      return elaborate(e.args[0]) + elaborate(e.args[1]);
    case Expr::Kind::Sub:
      return elaborate(e.args[0]) - elaborate(e.args[1]);
    case Expr::Kind::Mul:
      return elaborate(e.args[0]) * elaborate(e.args[1]);
    case Expr::Kind::Neg:
      return -elaborate(e.args[0]);
    case Expr::Kind::Pow:
      return elaborate(e.args[0]).pow(e.exponent);
    case Expr::Kind::Div: {
      const DiscElement num = elaborate(e.args[0]);
      const DiscElement den = elaborate(e.args[1]);
      if (den.is_zero()) throw Error(ErrorKind::NotUnitDenominator, "division by zero");
      if (!certified(is_unit(den))) {
        throw Error(ErrorKind::NotUnitDenominator, "divisor has a zero in the closed disc");
      }
      return divide(num, den);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown expression node");
}

}  // namespace discstab::frontend
