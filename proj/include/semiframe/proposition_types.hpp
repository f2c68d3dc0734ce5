#pragma once

#include <string>
#include <vector>

namespace semiframe {

// Three-valued logic for hypothesis and conclusion flags. Unknown marks a
// flag that rests on an inconclusive ladder trend: the check then reports
// INCONCLUSIVE rather than guessing either way.
enum class TriBool { False, True, Unknown };

[[nodiscard]] inline TriBool to_tri(bool b) { return b ? TriBool::True : TriBool::False; }

[[nodiscard]] inline TriBool tri_and(TriBool a, TriBool b) {
  if (a == TriBool::False || b == TriBool::False) return TriBool::False;
  if (a == TriBool::Unknown || b == TriBool::Unknown) return TriBool::Unknown;
  return TriBool::True;
}

[[nodiscard]] std::string to_string(TriBool t);

enum class CheckStatus {
  Pass,           // hypotheses hold, conclusion holds
  NotApplicable,  // some hypothesis fails; nothing is claimed
  Falsified,      // hypotheses hold, conclusion fails
  Inconclusive,   // some flag could not be decided at this ladder
};

[[nodiscard]] std::string to_string(CheckStatus s);

struct NamedFlag {
  std::string name;
  TriBool value = TriBool::Unknown;
};

// One mechanically checked implication on one concrete instance.
struct PropositionCheck {
  std::string id;
  std::string direction;  // "forward" / "reverse" for biconditionals, else ""
  std::string instance;
  std::vector<NamedFlag> hypotheses;
  NamedFlag conclusion;
  CheckStatus status = CheckStatus::Inconclusive;
  std::vector<std::string> notes;
};

// Status from the flags: any false hypothesis wins (NOT_APPLICABLE), then any
// unknown flag (INCONCLUSIVE), then the conclusion decides PASS or FALSIFIED.
[[nodiscard]] CheckStatus resolve_status(const std::vector<NamedFlag>& hypotheses,
                                         const NamedFlag& conclusion);

}  // namespace semiframe
