#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "semiframe/errors.hpp"

namespace semiframe {

// Exact rational with normalized sign (den > 0) and reduced terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] bool is_integer() const { return den == 1; }
  [[nodiscard]] std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
};

// Closed-form scalar expression in the index variable n. The grammar covers
// integers, the four arithmetic operations, unary minus, parentheses and the
// variable n; rationals are just integer division, which evaluates exactly.
// Keeping weights and index maps in this form means every truncation is
// computed from exact rationals rather than accumulated floating point.
class Expr {
 public:
  [[nodiscard]] static Expr constant(Rational value);
  [[nodiscard]] static Expr constant(std::int64_t value) { return constant(Rational::integer(value)); }
  [[nodiscard]] static Expr variable();
  [[nodiscard]] static Expr add(Expr lhs, Expr rhs);
  [[nodiscard]] static Expr sub(Expr lhs, Expr rhs);
  [[nodiscard]] static Expr mul(Expr lhs, Expr rhs);
  [[nodiscard]] static Expr div(Expr lhs, Expr rhs);
  [[nodiscard]] static Expr neg(Expr operand);

  // Exact evaluation; throws Error on division by zero.
  [[nodiscard]] Rational eval(std::int64_t n) const;
  [[nodiscard]] double eval_double(std::int64_t n) const { return eval(n).value(); }

  // Canonical text form; parse_expr(str()) reproduces the same tree.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] bool depends_on_n() const;

  friend bool operator==(const Expr& a, const Expr& b) { return a.str() == b.str(); }

  // Implementation tree; opaque outside the translation unit that defines it.
  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parses the grammar above; throws Error with a position on bad input.
[[nodiscard]] Expr parse_expr(const std::string& text);

}  // namespace semiframe
