#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiframe/classify.hpp"
#include "semiframe/operator_spec.hpp"
#include "semiframe/sequence.hpp"

namespace semiframe {

enum class TransformMode {
  Image,         // {L f_n}
  IdentityPlus,  // {f_n + L f_n}
  OperatorSum,   // {(L1 + L2) f_n}
  FamilySum,     // {f_n + g_n}
};

[[nodiscard]] std::string to_string(TransformMode m);

struct TransformPlan {
  TransformMode mode;
  SequenceFamily base;
  std::optional<OperatorSpec> op;         // Image, IdentityPlus, first of OperatorSum
  std::optional<OperatorSpec> second_op;  // OperatorSum
  std::optional<SequenceFamily> second;   // FamilySum
};

// Builds the transformed family. Throws Error when a binding the mode needs
// is missing; shape mismatches surface at materialization time.
[[nodiscard]] SequenceFamily apply_transform(const TransformPlan& plan);

// The canonical family of an operator: position n carries L* e_n, so the
// analysis matrix of the family at every level is exactly the truncation
// of L itself.
[[nodiscard]] SequenceFamily sequence_from_operator(const OperatorSpec& op);

// Audit of the perturbation argument for a pointwise sum f + g: when f has
// lower bound alpha, g has Bessel bound beta and sqrt(alpha) > sqrt(beta),
// the sum keeps the lower bound (sqrt(alpha) - sqrt(beta))^2.
struct SumHypothesesReport {
  double alpha = 0.0;          // last lower-bound value of f
  double beta = 0.0;           // last upper-bound value of g
  bool alpha_stable = false;   // f complete with a stable (or growing) lower bound
  bool sqrt_gap = false;       // sqrt(alpha) > sqrt(beta) strictly
  bool sum_complete = false;
  double guarantee = 0.0;      // (sqrt(alpha) - sqrt(beta))^2 when the gap holds
  double sum_lower_last = 0.0;
  bool bound_met = false;      // sum_lower_last >= guarantee - 1e-9
  LadderVerdict f_verdict;
  LadderVerdict g_verdict;
  LadderVerdict sum_verdict;
  std::vector<std::string> notes;
};

// Throws NotBessel when g's upper trajectory diverges, and InconclusiveTrend
// when the trends feeding alpha or beta cannot be read. When the square-root
// gap fails, no guarantee is claimed and a note records the reason instead of
// guessing a constant.
[[nodiscard]] SumHypothesesReport check_sum_hypotheses(const SequenceFamily& f,
                                                       const SequenceFamily& g,
                                                       const TruncationLadder& ladder,
                                                       const ClassContext& ctx);

}  // namespace semiframe
