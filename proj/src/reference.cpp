#include "semiframe/reference.hpp"

#include <cstddef>

#include "semiframe/expr.hpp"
#include "semiframe/linalg.hpp"

namespace semiframe {

namespace {

Expr n() { return Expr::variable(); }
Expr one() { return Expr::constant(1); }

}  // namespace

SequenceFamily ref_orthonormal() {
  return SequenceFamily::weighted_basis(one(), n(), "{e_n}");
}

SequenceFamily ref_weighted_index() {
  return SequenceFamily::weighted_basis(n(), n(), "{n e_n}");
}

SequenceFamily ref_reciprocal() {
  return SequenceFamily::weighted_basis(Expr::div(one(), n()), n(), "{(1/n) e_n}");
}

SequenceFamily ref_even_embedded() {
  const Expr two_n = Expr::mul(Expr::constant(2), n());
  return SequenceFamily::weighted_basis(two_n, two_n, "{2n e_2n}");
}

SequenceFamily ref_odd_embedded() {
  const Expr odd = Expr::sub(Expr::mul(Expr::constant(2), n()), one());
  return SequenceFamily::weighted_basis(odd, odd, "{(2n-1) e_(2n-1)}");
}

OperatorSpec ref_reciprocal_diagonal() {
  return OperatorSpec::diagonal(Expr::div(one(), n()), "diag(1/n)");
}

OperatorSpec ref_two_plus_diagonal() {
  return OperatorSpec::diagonal(Expr::add(Expr::constant(2), Expr::div(one(), n())),
                                "diag(2 + 1/n)");
}

OperatorSpec pair_collapse_operator() {
  auto rule = [](std::size_t level) {
    ComplexMatrix m(level, level);
    if (level >= 1) m(0, 0) = 1.0;
    if (level >= 2) m(0, 1) = 1.0;
    for (std::size_t k = 2; k < level; ++k) m(k, k) = 1.0;
    return m;
  };
  return OperatorSpec::explicit_rule(rule, "collapse(x1,x2 -> x1+x2)");
}

}  // namespace semiframe
