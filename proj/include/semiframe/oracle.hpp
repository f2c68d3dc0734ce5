#pragma once

#include <cstddef>
#include <cstdint>

#include "semiframe/linalg.hpp"
#include "semiframe/sequence.hpp"

namespace semiframe {

struct OracleConfig {
  std::size_t samples = 10000;    // at least 100
  std::uint64_t seed = 0;
  std::size_t dimension_cap = 8;  // at most 12; levels above it are refused
};

// Monte Carlo probe of the lower frame bound on the declared space: the
// smallest observed value of sum_n |<x, f_n>|^2 over unit vectors x. Every
// probe is a genuine unit vector, so the result is always an upper bound on
// the true constant; a uniform stage is followed by shrinking-radius local
// refinement around the incumbent so the estimate also closes in from above.
[[nodiscard]] double sampled_lower_bound(const SequenceFamily& family, std::size_t level,
                                         const OracleConfig& cfg);

// Same scheme for the synthesis direction: smallest observed value of
// |sum_n c_n f_n|^2 over unit coefficient vectors c.
[[nodiscard]] double sampled_rf_bound(const SequenceFamily& family, std::size_t level,
                                      const OracleConfig& cfg);

// Rank by exhaustive minor expansion: the largest k such that some k x k
// submatrix has |det| above tol. Cost grows combinatorially, so both matrix
// dimensions must stay at or below 8.
[[nodiscard]] std::size_t minor_rank(const ComplexMatrix& a, double tol);

}  // namespace semiframe
