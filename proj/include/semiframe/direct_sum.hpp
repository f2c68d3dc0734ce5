#pragma once

#include <cstddef>
#include <vector>

#include "semiframe/classify.hpp"
#include "semiframe/proposition_types.hpp"
#include "semiframe/sequence.hpp"

namespace semiframe {

[[nodiscard]] SequenceFamily direct_sum(const SequenceFamily& f, const SequenceFamily& g);

// Geometry of the two analysis ranges inside the shared coefficient space
// at one level. Families are comparable only when they have the same number
// of vectors per level; anything else is a ShapeError.
struct DisjointnessReport {
  std::size_t level = 0;
  std::vector<double> angles;         // principal angles, ascending
  std::size_t dim_range_f = 0;
  std::size_t dim_range_g = 0;
  std::size_t dim_intersection = 0;   // angles reported as exactly zero
  std::size_t dim_sum = 0;
  double orthogonality_defect = 0.0;  // cosine of the smallest principal angle
  bool disjoint = false;              // trivial intersection
  bool strongly_disjoint = false;     // every angle within 1e-8 of pi/2
  bool complement = false;            // disjoint and the ranges span everything
  bool strongly_complementary = false;
};

[[nodiscard]] std::vector<DisjointnessReport> disjointness(const SequenceFamily& f,
                                                           const SequenceFamily& g,
                                                           const TruncationLadder& ladder,
                                                           const ClassContext& ctx);

// Runs every direct-sum implication the library knows on one concrete pair:
// completeness transfer under disjointness (both directions), lower bound
// transfer under disjointness, the strongly-disjoint equivalence (both
// directions) and preservation of the synthesis bound by padding.
[[nodiscard]] std::vector<PropositionCheck> check_direct_sum_props(const SequenceFamily& f,
                                                                   const SequenceFamily& g,
                                                                   const TruncationLadder& ladder,
                                                                   const ClassContext& ctx);

}  // namespace semiframe
