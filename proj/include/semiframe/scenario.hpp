#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semiframe/expr.hpp"
#include "semiframe/ladder.hpp"
#include "semiframe/operator_spec.hpp"
#include "semiframe/propositions.hpp"
#include "semiframe/sequence.hpp"
#include "semiframe/transforms.hpp"

namespace semiframe {

// A scenario is a small declarative text file with four sections:
//
//   SPACES      one line "ladder 8 16 32 64 128"
//   OPERATORS   one named operator per line
//   SEQUENCES   one named family per line
//   TASKS       the work items, run in order
//
// Lines are whitespace-tokenized; '#' starts a comment. Weight and index
// formulas are single tokens in the arithmetic grammar over n (no internal
// whitespace), e.g. 2*n-1 or (n-2)/n. Declarations may reference names in
// any order; cycles are rejected. parse_scenario throws ScenarioError with
// the offending line number, and print_scenario emits the canonical form,
// which parses back to an equal scenario.

// Recipe for one named operator. Exactly one shape per kind:
//   diagonal <weight>            identity
//   identity_plus <op>           adjoint <op>
//   sum <op> <op>                compose <op> <op>
//   shift_weighted <map> <weight>
//   pair_collapse
struct OperatorDecl {
  std::string name;
  std::string kind;
  std::optional<Expr> weight;
  std::optional<Expr> index_map;
  std::string lhs;  // first referenced operator
  std::string rhs;  // second referenced operator
  std::size_t line = 0;
};

// Recipe for one named family:
//   weighted_basis <weight> <map>
//   explicit <dim> : <entries> : <entries> ...
//   operator_image <sequence> <operator>
//   pointwise_sum <sequence> <sequence>
//   direct_sum <sequence> <sequence>
struct SequenceDecl {
  std::string name;
  std::string kind;
  std::optional<Expr> weight;
  std::optional<Expr> index_map;
  std::vector<std::vector<Rational>> rows;  // explicit vectors, row-major
  std::string base;   // referenced sequence
  std::string other;  // second sequence, or the operator for operator_image
  std::size_t line = 0;
};

enum class TaskKind {
  Classify,          // classify <sequence>
  ClassifySequence,  // classify_sequence <sequence> (span-relative bounds)
  RfCheck,           // rf_check <sequence>
  Spectral,          // spectral <operator>
  Density,           // density <operator>
  Transform,         // transform <mode> <names...>
  DirectSum,         // direct_sum <sequence> <sequence>
  Check,             // check <proposition> <names...>
  CheckAll,          // check_all (built-in plus random suite)
};

[[nodiscard]] std::string to_string(TaskKind k);

struct ScenarioTask {
  TaskKind kind = TaskKind::Classify;
  TransformMode mode = TransformMode::Image;  // Transform only
  std::string prop_id;                        // Check only
  std::vector<std::string> names;             // referenced names, kind-specific order
  std::size_t line = 0;
};

struct Scenario {
  TruncationLadder ladder = default_ladder();
  std::vector<OperatorDecl> operator_decls;
  std::vector<SequenceDecl> sequence_decls;
  std::vector<ScenarioTask> tasks;

  // Built objects, aligned with the decl lists.
  std::vector<OperatorSpec> operators;
  std::vector<SequenceFamily> sequences;

  [[nodiscard]] const OperatorSpec& op(const std::string& name) const;
  [[nodiscard]] const SequenceFamily& sequence(const std::string& name) const;
};

[[nodiscard]] Scenario parse_scenario(const std::string& text);
[[nodiscard]] std::string print_scenario(const Scenario& s);

// The check task's bound instance, fields filled per the proposition's
// binding list.
[[nodiscard]] Instance instance_for_check(const Scenario& s, const ScenarioTask& task);

// Canonical demonstration scenarios, keyed by name.
[[nodiscard]] std::vector<std::string> builtin_scenario_names();
[[nodiscard]] Scenario builtin_scenario(const std::string& name);

}  // namespace semiframe
