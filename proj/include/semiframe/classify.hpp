#pragma once

#include <cstddef>
#include <vector>

#include "semiframe/ladder.hpp"
#include "semiframe/linalg.hpp"
#include "semiframe/proposition_types.hpp"
#include "semiframe/sequence.hpp"

namespace semiframe {

// Shared knobs for every ladder-based verdict.
struct ClassContext {
  RankPolicy rank;
  TrendPolicy trend;
};

// Frame-style bounds of one truncation, taken relative to a coordinate
// subspace K of dimension space_dim.
//
//   lower    smallest eigenvalue of the frame operator restricted to K,
//            the best constant A with A|x|^2 <= sum |<x, f_n>|^2 on K
//   upper    largest eigenvalue, the best Bessel constant B
//   rf_bound smallest eigenvalue of the Gram matrix, the best constant
//            with |sum c_n f_n|^2 >= rf |c|^2 over all coefficients
struct BoundsEstimate {
  std::size_t level = 0;
  std::size_t space_dim = 0;
  std::size_t count = 0;
  double lower = 0.0;
  double upper = 0.0;
  double rf_bound = 0.0;
  bool complete = false;    // analysis map injective on K
  bool surjective = false;  // analysis map onto the coefficient space
};

struct ClassFlags {
  bool complete = false;
  bool bessel = false;
  bool frame = false;
  bool lower_semi_frame = false;
  bool riesz_fischer = false;
};

struct LadderVerdict {
  std::vector<BoundsEstimate> per_level;
  Trajectory lower_traj;
  Trajectory upper_traj;
  Trajectory rf_traj;
  bool complete_all = false;
  bool surjective_all = false;
  ClassFlags flags;
};

// Bounds relative to the declared coordinate space of the materialization.
[[nodiscard]] BoundsEstimate bounds_at_level(const Materialization& mat, const RankPolicy& policy);

// Bounds relative to the numerical span of the family itself. Throws
// EmptySpan when the family spans nothing at this level.
[[nodiscard]] BoundsEstimate span_bounds_at_level(const Materialization& mat,
                                                  const RankPolicy& policy);

// Runs the ladder and classifies relative to the declared space.
[[nodiscard]] LadderVerdict classify(const SequenceFamily& family, const TruncationLadder& ladder,
                                     const ClassContext& ctx);

// Runs the ladder and classifies relative to the family's own span, the
// sequence sense of the lower bound.
[[nodiscard]] LadderVerdict classify_as_sequence(const SequenceFamily& family,
                                                 const TruncationLadder& ladder,
                                                 const ClassContext& ctx);

// Same ladder walk, surfaced for callers that only care about the synthesis
// bound and surjectivity.
[[nodiscard]] LadderVerdict rf_check(const SequenceFamily& family, const TruncationLadder& ladder,
                                     const ClassContext& ctx);

// Three-valued readings of a verdict. A flag is Unknown when the trajectory
// it depends on came back inconclusive, definite otherwise. Completeness and
// surjectivity are rank facts per level, so those two never go Unknown.
[[nodiscard]] TriBool tri_complete(const LadderVerdict& v);
[[nodiscard]] TriBool tri_bessel(const LadderVerdict& v);
[[nodiscard]] TriBool tri_lower_semi_frame(const LadderVerdict& v);
[[nodiscard]] TriBool tri_frame(const LadderVerdict& v);
[[nodiscard]] TriBool tri_riesz_fischer(const LadderVerdict& v);

}  // namespace semiframe
