#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semiframe/errors.hpp"
#include "semiframe/expr.hpp"

using namespace semiframe;

TEST_CASE("rational arithmetic stays exact and reduced") {
  const Rational a(3, 4);
  const Rational b(5, 6);
  CHECK((a + b).str() == "19/12");
  CHECK((a - b).str() == "-1/12");
  CHECK((a * b).str() == "5/8");
  CHECK((a / b).str() == "9/10");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::integer(12).is_integer());
  CHECK_FALSE(a.is_integer());
  CHECK(Rational(1, 3).value() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("rational construction rejects a zero denominator") {
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("expression evaluation is exact at integer arguments") {
  const Expr e = parse_expr("(n-2)/n");
  CHECK(e.eval(2).str() == "0");
  CHECK(e.eval(8).str() == "3/4");
  CHECK(e.eval_double(4) == doctest::Approx(0.5));

  const Expr shift = parse_expr("2*n-1");
  CHECK(shift.eval(1).str() == "1");
  CHECK(shift.eval(64).str() == "127");
}

TEST_CASE("division by a vanishing value reports an error") {
  const Expr e = parse_expr("1/(n-3)");
  CHECK(e.eval(4).str() == "1");
  CHECK_THROWS_AS(static_cast<void>(e.eval(3)), Error);
}

TEST_CASE("printing is canonical and reparses to the same tree") {
  const char* samples[] = {
      "n", "1/n", "2*n", "2*n-1", "2*n+1", "(n-2)/n", "-1/2", "n*n", "1/16", "-2-1/n",
  };
  for (const char* s : samples) {
    const Expr e = parse_expr(s);
    const Expr back = parse_expr(e.str());
    CHECK(back.str() == e.str());
  }
}

TEST_CASE("precedence binds products tighter than sums") {
  CHECK(parse_expr("1+2*n").eval(3).str() == "7");
  CHECK(parse_expr("(1+2)*n").eval(3).str() == "9");
  CHECK(parse_expr("2-1-1").eval(1).str() == "0");
  CHECK(parse_expr("8/2/2").eval(1).str() == "2");
}

TEST_CASE("dependence on n is detected through negation") {
  CHECK(parse_expr("n").depends_on_n());
  CHECK(parse_expr("-n").depends_on_n());
  CHECK_FALSE(parse_expr("3/4").depends_on_n());
  CHECK_FALSE(parse_expr("-(2)").depends_on_n());
}

TEST_CASE("malformed input is rejected with a message") {
  CHECK_THROWS_AS(static_cast<void>(parse_expr("")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_expr("2*")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_expr("(n")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_expr("n m")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_expr("x")), Error);
}
