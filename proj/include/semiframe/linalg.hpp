#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "semiframe/errors.hpp"

namespace semiframe {

using Complex = std::complex<double>;

// Dense complex matrix, row major. Deliberately minimal: enough surface for
// the truncation ladders this library works with (a few hundred rows at most),
// with the heavy decompositions delegated to the implementation file.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  [[nodiscard]] bool all_finite() const;
  [[nodiscard]] ComplexMatrix adjoint() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

  [[nodiscard]] std::vector<Complex> apply(const std::vector<Complex>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Largest absolute entrywise difference; matrices must share a shape.
[[nodiscard]] double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Full singular value decomposition a = U diag(s) V^H.
//   singular_values: descending, size min(m, n)
//   left_basis:      m x m unitary
//   right_basis:     n x n unitary
struct SvdResult {
  std::vector<double> singular_values;
  ComplexMatrix left_basis;
  ComplexMatrix right_basis;
};

// Tolerance policy for rank decisions. With no override the cutoff is the
// conventional max(m, n) * eps * sigma_max.
struct RankPolicy {
  std::optional<double> absolute;

  [[nodiscard]] double cutoff(std::size_t rows, std::size_t cols, double sigma_max) const;
};

// Throws InvalidMatrix when an entry is not finite.
[[nodiscard]] SvdResult svd(const ComplexMatrix& a);

// Number of singular values above the policy cutoff.
[[nodiscard]] std::size_t numerical_rank(const SvdResult& s, const RankPolicy& policy = {});

// Eigenvalues of a Hermitian matrix, ascending. Throws InvalidMatrix when the
// input is farther than 1e-10 from its own adjoint (entrywise) or non-finite.
[[nodiscard]] std::vector<double> hermitian_eigs(const ComplexMatrix& a);

// Principal angles between the column spans of two orthonormal bases, in
// radians, ascending in [0, pi/2]. Inputs must be column orthonormal within
// 1e-8 (else InvalidBasis) and share the ambient dimension (else ShapeError).
// Angles below 1e-8 radians are reported as exactly 0. The basis with fewer
// columns bounds the number of angles.
[[nodiscard]] std::vector<double> principal_angles(const ComplexMatrix& u_basis,
                                                   const ComplexMatrix& v_basis);

}  // namespace semiframe
