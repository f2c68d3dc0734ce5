#include "semiframe/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace semiframe {

namespace {

std::int64_t checked_cast(__int128 v, const char* context) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(std::string("rational overflow in ") + context);
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  const __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  const __int128 d = static_cast<__int128>(a.den) * b.den;
  return Rational(checked_cast(n, "add"), checked_cast(d, "add"));
}

Rational operator-(const Rational& a, const Rational& b) {
  const __int128 n = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
  const __int128 d = static_cast<__int128>(a.den) * b.den;
  return Rational(checked_cast(n, "sub"), checked_cast(d, "sub"));
}

Rational operator*(const Rational& a, const Rational& b) {
  const __int128 n = static_cast<__int128>(a.num) * b.num;
  const __int128 d = static_cast<__int128>(a.den) * b.den;
  return Rational(checked_cast(n, "mul"), checked_cast(d, "mul"));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw Error("division by zero");
  const __int128 n = static_cast<__int128>(a.num) * b.den;
  const __int128 d = static_cast<__int128>(a.den) * b.num;
  return Rational(checked_cast(n, "div"), checked_cast(d, "div"));
}

// ---- expression tree ----

struct Expr::Node {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg };
  Kind kind;
  Rational value;  // Constant only
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Expr Expr::constant(Rational value) {
  // Negative values are stored as Neg(positive) so the printed form reparses
  // to the identical tree.
  if (value.num < 0) return neg(constant(Rational(-value.num, value.den)));
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Constant;
  node->value = value;
  return Expr(std::move(node));
}

Expr Expr::variable() {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Variable;
  return Expr(std::move(node));
}

namespace {

std::shared_ptr<const Expr::Node> binary_node(Expr::Node::Kind kind,
                                              std::shared_ptr<const Expr::Node> lhs,
                                              std::shared_ptr<const Expr::Node> rhs) {
  auto node = std::make_shared<Expr::Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

}  // namespace

Expr Expr::add(Expr lhs, Expr rhs) {
  return Expr(binary_node(Node::Kind::Add, std::move(lhs.node_), std::move(rhs.node_)));
}
Expr Expr::sub(Expr lhs, Expr rhs) {
  return Expr(binary_node(Node::Kind::Sub, std::move(lhs.node_), std::move(rhs.node_)));
}
Expr Expr::mul(Expr lhs, Expr rhs) {
  return Expr(binary_node(Node::Kind::Mul, std::move(lhs.node_), std::move(rhs.node_)));
}
Expr Expr::div(Expr lhs, Expr rhs) {
  return Expr(binary_node(Node::Kind::Div, std::move(lhs.node_), std::move(rhs.node_)));
}
Expr Expr::neg(Expr operand) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::Neg;
  node->lhs = std::move(operand.node_);
  return Expr(std::move(node));
}

namespace {

Rational eval_node(const Expr::Node& node, std::int64_t n) {
  using Kind = Expr::Node::Kind;
  switch (node.kind) {
    case Kind::Constant: return node.value;
    case Kind::Variable: return Rational::integer(n);
    case Kind::Add: return eval_node(*node.lhs, n) + eval_node(*node.rhs, n);
    case Kind::Sub: return eval_node(*node.lhs, n) - eval_node(*node.rhs, n);
    case Kind::Mul: return eval_node(*node.lhs, n) * eval_node(*node.rhs, n);
    case Kind::Div: return eval_node(*node.lhs, n) / eval_node(*node.rhs, n);
    case Kind::Neg: return Rational::integer(0) - eval_node(*node.lhs, n);
  }
  throw Error("corrupt expression node");
}

int precedence(const Expr::Node& node) {
  using Kind = Expr::Node::Kind;
  switch (node.kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Constant:
      // A fractional literal prints as num/den, so it binds like division.
      return node.value.den == 1 ? 4 : 2;
    default: return 4;
  }
}

void print_node(const Expr::Node& node, std::string& out) {
  using Kind = Expr::Node::Kind;
  auto child = [&out](const Expr::Node& c, int parent_prec, bool right_side) {
    // Parenthesize when the child binds looser, or equally for the
    // non-associative right operand (a-(b-c), a/(b/c)).
    const int cp = precedence(c);
    const bool need = cp < parent_prec || (cp == parent_prec && right_side);
    if (need) out.push_back('(');
    print_node(c, out);
    if (need) out.push_back(')');
  };
  switch (node.kind) {
    case Kind::Constant:
      out += node.value.str();
      return;
    case Kind::Variable: out.push_back('n'); return;
    case Kind::Add:
      child(*node.lhs, 1, false); out.push_back('+'); child(*node.rhs, 1, true); return;
    case Kind::Sub:
      child(*node.lhs, 1, false); out.push_back('-'); child(*node.rhs, 1, true); return;
    case Kind::Mul:
      child(*node.lhs, 2, false); out.push_back('*'); child(*node.rhs, 2, true); return;
    case Kind::Div:
      child(*node.lhs, 2, false); out.push_back('/'); child(*node.rhs, 2, true); return;
    case Kind::Neg:
      out.push_back('-');
      child(*node.lhs, 3, true);
      return;
  }
}

bool node_depends_on_n(const Expr::Node& node) {
  using Kind = Expr::Node::Kind;
  switch (node.kind) {
    case Kind::Constant: return false;
    case Kind::Variable: return true;
    case Kind::Neg: return node_depends_on_n(*node.lhs);
    default: return node_depends_on_n(*node.lhs) || node_depends_on_n(*node.rhs);
  }
}

}  // namespace

Rational Expr::eval(std::int64_t n) const { return eval_node(*node_, n); }

std::string Expr::str() const {
  std::string out;
  print_node(*node_, out);
  return out;
}

bool Expr::depends_on_n() const { return node_depends_on_n(*node_); }

// ---- recursive descent parser ----

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr parse() {
    Expr e = expression();
    skip_space();
    if (pos_ != text_.size())
      throw Error("unexpected character '" + std::string(1, text_[pos_]) +
                  "' at position " + std::to_string(pos_));
    return e;
  }

 private:
  Expr expression() {
    Expr lhs = term();
    while (true) {
      skip_space();
      if (consume('+')) {
        lhs = Expr::add(std::move(lhs), term());
      } else if (consume('-')) {
        lhs = Expr::sub(std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      skip_space();
      if (consume('*')) {
        lhs = Expr::mul(std::move(lhs), factor());
      } else if (consume('/')) {
        lhs = Expr::div(std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_space();
    if (consume('-')) return Expr::neg(factor());
    return primary();
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) throw Error("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      skip_space();
      if (!consume(')')) throw Error("missing ')' at position " + std::to_string(pos_));
      return e;
    }
    if (c == 'n') {
      ++pos_;
      return Expr::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string digits = text_.substr(start, pos_ - start);
      errno = 0;
      const long long v = std::strtoll(digits.c_str(), nullptr, 10);
      if (errno != 0) throw Error("integer literal out of range: " + digits);
      return Expr::constant(v);
    }
    throw Error("unexpected character '" + std::string(1, c) + "' at position " +
                std::to_string(pos_));
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace semiframe
