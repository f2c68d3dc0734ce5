#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semiframe/errors.hpp"
#include "semiframe/expr.hpp"
#include "semiframe/reference.hpp"
#include "semiframe/sequence.hpp"

using namespace semiframe;

namespace {

const Expr n = Expr::variable();

double abs2(const Complex& z) { return std::norm(z); }

}  // namespace

TEST_CASE("weighted basis with the identity map fills the diagonal") {
  const SequenceFamily fam = SequenceFamily::weighted_basis(n, n);
  const Materialization m = fam.materialize(4);
  CHECK(m.level == 4);
  CHECK(m.ambient_dim == 4);
  CHECK(m.count() == 4);
  CHECK(m.space_coords == std::vector<std::size_t>{0, 1, 2, 3});
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(m.vectors[i][j] == (i == j ? Complex(double(i + 1)) : Complex(0)));
    }
  }
  REQUIRE(m.atoms.has_value());
  CHECK((*m.atoms)[2].size() == 1);
  CHECK((*m.atoms)[2][0].coord == 2);
  CHECK((*m.atoms)[2][0].weight == Complex(3.0));
}

TEST_CASE("an embedding index map leaves zero vectors at inactive positions") {
  const SequenceFamily even = ref_even_embedded();  // (2n) e_2n
  const Materialization m = even.materialize(8);
  CHECK(m.count() == 8);
  CHECK(m.ambient_dim == 8);
  // active positions are 2, 4, 6, 8 (1-based), i.e. coords 1, 3, 5, 7
  CHECK(m.space_coords == std::vector<std::size_t>{1, 3, 5, 7});
  // position 2n holds (2n) e_2n; odd positions hold the zero vector
  CHECK(abs2(m.vectors[1][1]) == doctest::Approx(4.0));
  CHECK(abs2(m.vectors[3][3]) == doctest::Approx(16.0));
  for (std::size_t j = 0; j < 8; ++j) {
    CHECK(m.vectors[0][j] == Complex(0));
    CHECK(m.vectors[2][j] == Complex(0));
  }
  REQUIRE(m.atoms.has_value());
  CHECK((*m.atoms)[0].empty());
  CHECK((*m.atoms)[1].size() == 1);
}

TEST_CASE("index maps must stay injective on active positions") {
  // sigma(n) = 1 collides immediately
  const SequenceFamily clash = SequenceFamily::weighted_basis(n, Expr::constant(1));
  CHECK_THROWS_AS(clash.materialize(4), InvalidBasis);
}

TEST_CASE("index maps must evaluate to positive integers") {
  const SequenceFamily frac = SequenceFamily::weighted_basis(n, parse_expr("n/2"));
  CHECK_THROWS_AS(frac.materialize(4), InvalidBasis);
}

TEST_CASE("explicit vectors zero pad upward and refuse to shrink") {
  const SequenceFamily fam = SequenceFamily::explicit_vectors({{1.0, 0.0}, {0.0, 2.0}});
  const Materialization big = fam.materialize(4);
  CHECK(big.ambient_dim == 4);
  CHECK(big.count() == 2);
  CHECK(big.vectors[1][1] == Complex(2.0));
  CHECK(big.vectors[1][3] == Complex(0.0));
  CHECK(big.space_coords.size() == 4);
  CHECK_THROWS_AS(fam.materialize(1), ShapeError);
}

TEST_CASE("operator image applies the truncated matrix to every vector") {
  const SequenceFamily base = ref_weighted_index();
  const SequenceFamily image = SequenceFamily::operator_image(base, ref_reciprocal_diagonal());
  const Materialization m = image.materialize(6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(m.vectors[i][j] == (i == j ? Complex(1.0) : Complex(0.0)));
    }
  }
}

TEST_CASE("pointwise sum adds matching positions") {
  const SequenceFamily ortho = ref_orthonormal();
  const SequenceFamily half = SequenceFamily::weighted_basis(parse_expr("-1/2"), n);
  const SequenceFamily sum = SequenceFamily::pointwise_sum(ortho, half);
  const Materialization m = sum.materialize(4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(m.vectors[i][i] == Complex(0.5));
  }
}

TEST_CASE("direct sum stacks coefficient spaces block by block") {
  const SequenceFamily a = ref_orthonormal();
  const SequenceFamily b = SequenceFamily::weighted_basis(parse_expr("2"), n);
  const SequenceFamily sum = SequenceFamily::direct_sum_of(a, b);
  const Materialization m = sum.materialize(3);
  CHECK(m.ambient_dim == 6);
  CHECK(m.count() == 6);
  // first block: e_i in coords 0..2; second block: 2 e_i in coords 3..5
  CHECK(m.vectors[0][0] == Complex(1.0));
  CHECK(m.vectors[3][3] == Complex(2.0));
  CHECK(m.vectors[3][0] == Complex(0.0));
  CHECK(m.space_coords.size() == 6);
}

TEST_CASE("assemble_triple builds analysis synthesis and frame consistently") {
  const SequenceFamily base = ref_weighted_index();
  const Materialization m = base.materialize(5);
  const OperatorTriple t = assemble_triple(m);
  CHECK(t.analysis.rows() == 5);
  CHECK(t.analysis.cols() == 5);
  // row n is the conjugate of f_n = n e_n
  CHECK(t.analysis(2, 2) == Complex(3.0));
  CHECK(max_abs_diff(t.synthesis, t.analysis.adjoint()) == 0.0);
  const ComplexMatrix s = t.synthesis * t.analysis;
  CHECK(max_abs_diff(t.frame, s) < 1e-14);
}

TEST_CASE("transformed triple matches materializing the image family") {
  const SequenceFamily base = ref_weighted_index();
  const OperatorSpec op = ref_two_plus_diagonal();
  const OperatorTriple calc = transformed_triple(base, op, 8);
  const SequenceFamily image = SequenceFamily::operator_image(base, op);
  const OperatorTriple direct = assemble_triple(image.materialize(8));
  CHECK(max_abs_diff(calc.analysis, direct.analysis) < 1e-12);
  CHECK(max_abs_diff(calc.synthesis, direct.synthesis) < 1e-12);
  CHECK(max_abs_diff(calc.frame, direct.frame) < 1e-12);
}

TEST_CASE("labels compose when not provided") {
  const SequenceFamily fam = SequenceFamily::weighted_basis(n, n, "base");
  CHECK(fam.label() == "base");
  const SequenceFamily image = SequenceFamily::operator_image(fam, ref_reciprocal_diagonal());
  CHECK(image.label().find("base") != std::string::npos);
}

TEST_CASE("a weight evaluating to a division failure surfaces as an error") {
  const SequenceFamily fam = SequenceFamily::weighted_basis(parse_expr("1/(n-3)"), n);
  CHECK_THROWS_AS(fam.materialize(4), Error);
}
