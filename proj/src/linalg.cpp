#include "semiframe/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace semiframe {

namespace {

using EigenMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMatrix to_eigen(const ComplexMatrix& a) {
  return Eigen::Map<const EigenMatrix>(a.data().data(),
                                       static_cast<Eigen::Index>(a.rows()),
                                       static_cast<Eigen::Index>(a.cols()));
}

ComplexMatrix from_eigen(const EigenMatrix& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  Eigen::Map<EigenMatrix>(out.data().data(), m.rows(), m.cols()) = m;
  return out;
}

constexpr double kHermitianTol = 1e-10;
constexpr double kOrthonormalTol = 1e-8;
constexpr double kZeroAngleTol = 1e-8;

}  // namespace

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  return from_eigen(to_eigen(a) * to_eigen(b));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("matrix sum: shapes differ");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] += b.data()[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("matrix difference: shapes differ");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= b.data()[i];
  return out;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& x) const {
  if (x.size() != cols_) throw ShapeError("matrix apply: vector length differs from cols");
  std::vector<Complex> y(rows_, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc(0.0, 0.0);
    const Complex* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
  return y;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("max_abs_diff: shapes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

double RankPolicy::cutoff(std::size_t rows, std::size_t cols, double sigma_max) const {
  if (absolute) return *absolute;
  const double dim = static_cast<double>(std::max(rows, cols));
  return dim * std::numeric_limits<double>::epsilon() * sigma_max;
}

SvdResult svd(const ComplexMatrix& a) {
  if (!a.all_finite()) throw InvalidMatrix("svd: non-finite entry");
  const EigenMatrix m = to_eigen(a);
  SvdResult out;
  // Jacobi is the most accurate option and cheap at small sizes; the
  // divide-and-conquer kernel takes over once it is clearly faster.
  if (std::max(a.rows(), a.cols()) <= 32) {
    Eigen::JacobiSVD<EigenMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.singular_values.assign(dec.singularValues().data(),
                               dec.singularValues().data() + dec.singularValues().size());
    out.left_basis = from_eigen(dec.matrixU());
    out.right_basis = from_eigen(dec.matrixV());
  } else {
    Eigen::BDCSVD<EigenMatrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.singular_values.assign(dec.singularValues().data(),
                               dec.singularValues().data() + dec.singularValues().size());
    out.left_basis = from_eigen(dec.matrixU());
    out.right_basis = from_eigen(dec.matrixV());
  }
  return out;
}

std::size_t numerical_rank(const SvdResult& s, const RankPolicy& policy) {
  const std::size_t m = s.left_basis.rows();
  const std::size_t n = s.right_basis.rows();
  const double sigma_max = s.singular_values.empty() ? 0.0 : s.singular_values.front();
  const double tol = policy.cutoff(m, n, sigma_max);
  std::size_t rank = 0;
  for (const double sv : s.singular_values) {
    if (sv > tol) ++rank;
  }
  return rank;
}

std::vector<double> hermitian_eigs(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidMatrix("hermitian_eigs: matrix not square");
  if (!a.all_finite()) throw InvalidMatrix("hermitian_eigs: non-finite entry");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > kHermitianTol)
        throw InvalidMatrix("hermitian_eigs: matrix not Hermitian within 1e-10");
    }
  }
  Eigen::SelfAdjointEigenSolver<EigenMatrix> es(to_eigen(a), Eigen::EigenvaluesOnly);
  std::vector<double> eigs(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

std::vector<double> principal_angles(const ComplexMatrix& u_basis,
                                     const ComplexMatrix& v_basis) {
  if (u_basis.rows() != v_basis.rows())
    throw ShapeError("principal_angles: ambient dimensions differ");
  auto check_orthonormal = [](const ComplexMatrix& b, const char* which) {
    const ComplexMatrix gram = b.adjoint() * b;
    for (std::size_t r = 0; r < gram.rows(); ++r) {
      for (std::size_t c = 0; c < gram.cols(); ++c) {
        const Complex expect = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
        if (std::abs(gram(r, c) - expect) > kOrthonormalTol)
          throw InvalidBasis(std::string("principal_angles: ") + which +
                             " basis not column-orthonormal");
      }
    }
  };
  check_orthonormal(u_basis, "left");
  check_orthonormal(v_basis, "right");

  if (u_basis.cols() == 0 || v_basis.cols() == 0) return {};

  const SvdResult cross = svd(u_basis.adjoint() * v_basis);
  std::vector<double> angles;
  angles.reserve(cross.singular_values.size());
  for (const double sv : cross.singular_values) {
    const double c = std::clamp(sv, 0.0, 1.0);
    double angle = std::acos(c);
    if (angle < kZeroAngleTol) angle = 0.0;
    angles.push_back(angle);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace semiframe
