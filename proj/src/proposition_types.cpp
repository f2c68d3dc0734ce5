#include "semiframe/proposition_types.hpp"

namespace semiframe {

std::string to_string(TriBool t) {
  switch (t) {
    case TriBool::False: return "false";
    case TriBool::True: return "true";
    case TriBool::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::NotApplicable: return "NOT_APPLICABLE";
    case CheckStatus::Falsified: return "FALSIFIED";
    case CheckStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

CheckStatus resolve_status(const std::vector<NamedFlag>& hypotheses, const NamedFlag& conclusion) {
  for (const NamedFlag& h : hypotheses)
    if (h.value == TriBool::False) return CheckStatus::NotApplicable;
  for (const NamedFlag& h : hypotheses)
    if (h.value == TriBool::Unknown) return CheckStatus::Inconclusive;
  if (conclusion.value == TriBool::Unknown) return CheckStatus::Inconclusive;
  return conclusion.value == TriBool::True ? CheckStatus::Pass : CheckStatus::Falsified;
}

}  // namespace semiframe
