#include "semiframe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "semiframe/errors.hpp"
#include "semiframe/rng.hpp"

namespace semiframe {

namespace {

void validate(const OracleConfig& cfg, std::size_t level) {
  if (cfg.samples < 100) throw Error("oracle needs at least 100 samples");
  if (cfg.dimension_cap > 12) throw Error("oracle dimension cap must stay at or below 12");
  if (level > cfg.dimension_cap)
    throw Error("level " + std::to_string(level) + " exceeds the oracle dimension cap " +
                std::to_string(cfg.dimension_cap));
}

// Smallest observed |m x|^2 over unit vectors x, by uniform sampling followed
// by greedy local refinement with shrinking step radius. Every candidate is
// normalized before evaluation, so the returned value is attained by a true
// unit vector whatever the refinement does.
double min_quadratic(const ComplexMatrix& m, Rng& rng, std::size_t samples) {
  const std::size_t d = m.cols();
  if (d == 0) return 0.0;
  const auto q = [&m, d](const std::vector<Complex>& x) {
    double total = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Complex acc(0.0, 0.0);
      for (std::size_t c = 0; c < d; ++c) acc += m(r, c) * x[c];
      total += std::norm(acc);
    }
    return total;
  };

  constexpr std::size_t kStages = 12;
  const std::size_t per_stage = (samples * 3 / 5) / kStages;
  const std::size_t uniform_count = samples - per_stage * kStages;

  std::vector<Complex> best = rng.unit_vector(d);
  double best_value = q(best);
  for (std::size_t i = 1; i < uniform_count; ++i) {
    const auto x = rng.unit_vector(d);
    const double v = q(x);
    if (v < best_value) {
      best_value = v;
      best = x;
    }
  }

  double radius = 0.5;
  for (std::size_t stage = 0; stage < kStages; ++stage, radius *= 0.6) {
    for (std::size_t i = 0; i < per_stage; ++i) {
      std::vector<Complex> x = best;
      double norm2 = 0.0;
      for (auto& z : x) {
        z += radius * rng.complex_gaussian();
        norm2 += std::norm(z);
      }
      if (norm2 == 0.0) continue;
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& z : x) z *= inv;
      const double v = q(x);
      if (v < best_value) {
        best_value = v;
        best = std::move(x);
      }
    }
  }
  return best_value;
}

ComplexMatrix analysis_rows(const Materialization& mat) {
  const auto& coords = mat.space_coords;
  ComplexMatrix m(mat.count(), coords.size());
  for (std::size_t n = 0; n < mat.count(); ++n)
    for (std::size_t j = 0; j < coords.size(); ++j)
      m(n, j) = std::conj(mat.vectors[n][coords[j]]);
  return m;
}

ComplexMatrix synthesis_rows(const Materialization& mat) {
  const auto& coords = mat.space_coords;
  ComplexMatrix m(coords.size(), mat.count());
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (std::size_t n = 0; n < mat.count(); ++n) m(j, n) = mat.vectors[n][coords[j]];
  return m;
}

Complex laplace_det(const ComplexMatrix& a, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return a(rows[0], cols[0]);
  Complex sum(0.0, 0.0);
  double sign = 1.0;
  const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    sum += sign * a(rows[0], cols[j]) * laplace_det(a, sub_rows, sub_cols);
    sign = -sign;
  }
  return sum;
}

// Advances a strictly increasing k-subset of [0, n); false once exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

}  // namespace

double sampled_lower_bound(const SequenceFamily& family, std::size_t level,
                           const OracleConfig& cfg) {
  validate(cfg, level);
  const Materialization mat = family.materialize(level);
  Rng rng(mix_seed(cfg.seed, "oracle-lower", level));
  return min_quadratic(analysis_rows(mat), rng, cfg.samples);
}

double sampled_rf_bound(const SequenceFamily& family, std::size_t level, const OracleConfig& cfg) {
  validate(cfg, level);
  const Materialization mat = family.materialize(level);
  Rng rng(mix_seed(cfg.seed, "oracle-rf", level));
  return min_quadratic(synthesis_rows(mat), rng, cfg.samples);
}

std::size_t minor_rank(const ComplexMatrix& a, double tol) {
  constexpr std::size_t kMaxDim = 8;
  if (a.rows() > kMaxDim || a.cols() > kMaxDim)
    throw Error("minor_rank is exhaustive and limited to 8 x 8");
  if (!a.all_finite()) throw InvalidMatrix("minor_rank needs finite entries");
  if (tol < 0.0) throw Error("minor_rank tolerance must be nonnegative");
  for (std::size_t k = std::min(a.rows(), a.cols()); k >= 1; --k) {
    auto rows = first_combination(k);
    do {
      auto cols = first_combination(k);
      do {
        if (std::abs(laplace_det(a, rows, cols)) > tol) return k;
      } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
  }
  return 0;
}

}  // namespace semiframe
