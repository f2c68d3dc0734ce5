#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "semiframe/errors.hpp"
#include "semiframe/linalg.hpp"

using namespace semiframe;

namespace {

constexpr double kPi = 3.14159265358979323846;

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("matrix product and adjoint behave like the definitions") {
  ComplexMatrix a(2, 3);
  a(0, 0) = Complex(1, 1);
  a(0, 2) = 2.0;
  a(1, 1) = Complex(0, -3);
  const ComplexMatrix ah = a.adjoint();
  CHECK(ah.rows() == 3);
  CHECK(ah.cols() == 2);
  CHECK(ah(0, 0) == Complex(1, -1));
  CHECK(ah(1, 1) == Complex(0, 3));

  const ComplexMatrix gram = a * ah;  // 2 x 2, Hermitian
  CHECK(gram(0, 0).real() == doctest::Approx(6.0));
  CHECK(gram(1, 1).real() == doctest::Approx(9.0));
  CHECK(gram(0, 1) == Complex(0, 0));

  const std::vector<Complex> x = {1.0, 0.0, Complex(0, 1)};
  const std::vector<Complex> y = a.apply(x);
  CHECK(y[0] == Complex(1, 3));
  CHECK(y[1] == Complex(0, 0));
}

TEST_CASE("mismatched shapes are rejected") {
  const ComplexMatrix a(2, 3);
  const ComplexMatrix b(2, 3);
  CHECK_THROWS_AS(a * b, ShapeError);
  CHECK_THROWS_AS(static_cast<void>(max_abs_diff(a, ComplexMatrix(3, 2))), ShapeError);
  CHECK_THROWS_AS(static_cast<void>(a.apply(std::vector<Complex>(2))), ShapeError);
}

TEST_CASE("svd of a diagonal matrix returns sorted absolute entries") {
  ComplexMatrix m(3, 3);
  m(0, 0) = -2.0;
  m(1, 1) = 0.5;
  m(2, 2) = 1.0;
  const SvdResult s = svd(m);
  REQUIRE(s.singular_values.size() == 3);
  CHECK(s.singular_values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.singular_values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.singular_values[2] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("svd factors reassemble the matrix") {
  ComplexMatrix m(3, 2);
  m(0, 0) = Complex(1, 2);
  m(1, 0) = -1.0;
  m(1, 1) = Complex(0, 1);
  m(2, 1) = 3.0;
  const SvdResult s = svd(m);
  // rebuild U diag(s) V^H and compare
  ComplexMatrix mid(3, 2);
  for (std::size_t i = 0; i < 2; ++i) mid(i, i) = s.singular_values[i];
  const ComplexMatrix back = s.left_basis * mid * s.right_basis.adjoint();
  CHECK(max_abs_diff(back, m) < 1e-12);
}

TEST_CASE("svd rejects non finite entries") {
  ComplexMatrix m(1, 1);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(static_cast<void>(svd(m)), InvalidMatrix);
}

TEST_CASE("numerical rank respects the policy cutoff") {
  ComplexMatrix m(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-4;
  m(2, 2) = 1e-17;
  const SvdResult s = svd(m);
  CHECK(numerical_rank(s, RankPolicy{}) == 2);           // 1e-17 sits under the scaled epsilon
  CHECK(numerical_rank(s, RankPolicy{1e-3}) == 1);       // explicit floor
  CHECK(numerical_rank(s, RankPolicy{1e-18}) == 3);
}

TEST_CASE("default cutoff scales with dimension and largest value") {
  const RankPolicy policy;
  const double eps = std::numeric_limits<double>::epsilon();
  CHECK(policy.cutoff(8, 4, 2.0) == doctest::Approx(8 * eps * 2.0));
  CHECK(RankPolicy{0.25}.cutoff(8, 4, 2.0) == 0.25);
}

TEST_CASE("hermitian eigenvalues come back ascending and exact on diagonals") {
  const std::vector<double> eigs = hermitian_eigs(diag2(3.0, -1.0));
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eigs[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("hermitian check rejects an unsymmetric matrix") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;  // adjoint entry stays 0
  CHECK_THROWS_AS(static_cast<void>(hermitian_eigs(m)), InvalidMatrix);
}

TEST_CASE("pauli like matrix has the expected spectrum") {
  // [[0, -i], [i, 0]] has eigenvalues -1 and 1
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(0, -1);
  m(1, 0) = Complex(0, 1);
  const std::vector<double> eigs = hermitian_eigs(m);
  CHECK(eigs[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eigs[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("principal angles separate orthogonal, shared and tilted spans") {
  ComplexMatrix e1(3, 1);
  e1(0, 0) = 1.0;
  ComplexMatrix e2(3, 1);
  e2(1, 0) = 1.0;
  const std::vector<double> right = principal_angles(e1, e2);
  REQUIRE(right.size() == 1);
  CHECK(right[0] == doctest::Approx(kPi / 2).epsilon(1e-12));

  const std::vector<double> same = principal_angles(e1, e1);
  CHECK(same[0] == 0.0);  // exact zero by the snapping rule

  ComplexMatrix tilted(3, 1);
  tilted(0, 0) = std::sqrt(0.5);
  tilted(1, 0) = std::sqrt(0.5);
  const std::vector<double> mid = principal_angles(e1, tilted);
  CHECK(mid[0] == doctest::Approx(kPi / 4).epsilon(1e-10));
}

TEST_CASE("principal angles validate their inputs") {
  ComplexMatrix skew(3, 1);
  skew(0, 0) = 2.0;  // not unit norm
  ComplexMatrix e1(3, 1);
  e1(0, 0) = 1.0;
  CHECK_THROWS_AS(static_cast<void>(principal_angles(skew, e1)), InvalidBasis);
  CHECK_THROWS_AS(static_cast<void>(principal_angles(e1, ComplexMatrix(4, 1))), ShapeError);
}

TEST_CASE("angle count follows the smaller basis") {
  ComplexMatrix plane(4, 2);
  plane(0, 0) = 1.0;
  plane(1, 1) = 1.0;
  ComplexMatrix line(4, 1);
  line(2, 0) = 1.0;
  CHECK(principal_angles(plane, line).size() == 1);
  CHECK(principal_angles(line, plane).size() == 1);
}
