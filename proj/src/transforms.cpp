#include "semiframe/transforms.hpp"

#include <cmath>

#include "semiframe/errors.hpp"

namespace semiframe {

std::string to_string(TransformMode m) {
  switch (m) {
    case TransformMode::Image: return "image";
    case TransformMode::IdentityPlus: return "identity_plus";
    case TransformMode::OperatorSum: return "operator_sum";
    case TransformMode::FamilySum: return "family_sum";
  }
  return "unknown";
}

SequenceFamily apply_transform(const TransformPlan& plan) {
  switch (plan.mode) {
    case TransformMode::Image:
      if (!plan.op) throw Error("image transform needs an operator");
      return SequenceFamily::operator_image(plan.base, *plan.op);
    case TransformMode::IdentityPlus:
      if (!plan.op) throw Error("identity_plus transform needs an operator");
      return SequenceFamily::operator_image(plan.base, OperatorSpec::identity_plus(*plan.op));
    case TransformMode::OperatorSum:
      if (!plan.op || !plan.second_op)
        throw Error("operator_sum transform needs two operators");
      return SequenceFamily::operator_image(plan.base,
                                            OperatorSpec::sum(*plan.op, *plan.second_op));
    case TransformMode::FamilySum:
      if (!plan.second) throw Error("family_sum transform needs a second family");
      return SequenceFamily::pointwise_sum(plan.base, *plan.second);
  }
  throw Error("corrupt transform plan");
}

SequenceFamily sequence_from_operator(const OperatorSpec& op) {
  SequenceFamily basis = SequenceFamily::weighted_basis(Expr::constant(1), Expr::variable());
  return SequenceFamily::operator_image(std::move(basis), OperatorSpec::adjoint(op));
}

SumHypothesesReport check_sum_hypotheses(const SequenceFamily& f, const SequenceFamily& g,
                                         const TruncationLadder& ladder,
                                         const ClassContext& ctx) {
  SumHypothesesReport rep;
  rep.f_verdict = classify(f, ladder, ctx);
  rep.g_verdict = classify(g, ladder, ctx);

  if (rep.g_verdict.upper_traj.trend == Trend::Diverging)
    throw NotBessel("second family has a diverging upper bound, no Bessel constant exists");
  if (rep.g_verdict.upper_traj.trend == Trend::Inconclusive)
    throw InconclusiveTrend("upper bound of the second family is inconclusive; extend the ladder");
  if (rep.f_verdict.lower_traj.trend == Trend::Inconclusive)
    throw InconclusiveTrend("lower bound of the base family is inconclusive; extend the ladder");

  rep.alpha = rep.f_verdict.lower_traj.last_value();
  rep.beta = rep.g_verdict.upper_traj.last_value();
  rep.alpha_stable = rep.f_verdict.complete_all &&
                     (rep.f_verdict.lower_traj.trend == Trend::Stable ||
                      rep.f_verdict.lower_traj.trend == Trend::Diverging);

  const SequenceFamily sum = SequenceFamily::pointwise_sum(f, g);
  rep.sum_verdict = classify(sum, ladder, ctx);
  rep.sum_complete = rep.sum_verdict.complete_all;
  rep.sum_lower_last = rep.sum_verdict.lower_traj.last_value();

  rep.sqrt_gap = std::sqrt(rep.alpha) > std::sqrt(rep.beta);
  if (rep.sqrt_gap) {
    const double diff = std::sqrt(rep.alpha) - std::sqrt(rep.beta);
    rep.guarantee = diff * diff;
  } else {
    rep.guarantee = 0.0;
    rep.notes.push_back(
        "sqrt(alpha) does not exceed sqrt(beta); no positive lower bound is guaranteed");
  }
  rep.bound_met = rep.sum_lower_last >= rep.guarantee - 1e-9;
  return rep;
}

}  // namespace semiframe
