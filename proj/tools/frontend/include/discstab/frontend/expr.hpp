#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "discstab/disc_element.hpp"
#include "discstab/errors.hpp"

namespace discstab::frontend {

struct Expr {
  enum class Kind { Number, Var, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind = Kind::Number;
  Rational value;          // Number
  unsigned exponent = 0;   // Pow
  std::vector<Expr> args;  // operands, left to right
};

/// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 256;

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail);

  /// Zero-based byte offset of the offending token.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// expr   := term (('+'|'-') term)*
/// term   := factor (('*'|'/') factor)*
/// factor := '-' factor | base ('^' uint)?
/// base   := number | 'z' | '(' expr ')'
///
/// Numbers are integers or decimals ("0.125", "2.5e-3"), read exactly; a
/// fraction a/b is an ordinary quotient.
Expr parse(std::string_view text);

/// Throws Error{NotUnitDenominator} when a divisor is not a certified unit.
DiscElement elaborate(const Expr& e);

inline DiscElement parse_element(std::string_view text) { return elaborate(parse(text)); }

}  // namespace discstab::frontend
