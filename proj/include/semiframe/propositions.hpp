#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiframe/classify.hpp"
#include "semiframe/ladder.hpp"
#include "semiframe/linalg.hpp"
#include "semiframe/operator_spec.hpp"
#include "semiframe/proposition_types.hpp"
#include "semiframe/sequence.hpp"

namespace semiframe {

// Bindings one check runs on. Which slots must be present depends on the
// statement: most take a family and an operator, the sum and direct-sum
// statements take two families, the perturbed-operator statement takes a
// family and two operators.
struct Instance {
  std::string description;
  std::optional<SequenceFamily> f;
  std::optional<SequenceFamily> g;
  std::optional<OperatorSpec> l;
  std::optional<OperatorSpec> l2;
};

struct CheckContext {
  TruncationLadder ladder = default_ladder();
  RankPolicy rank;
  TrendPolicy trend;

  [[nodiscard]] ClassContext class_ctx() const { return ClassContext{rank, trend}; }
};

// Identifiers of every implication the library can check mechanically, in
// catalogue order. Biconditional ids expand into a forward and a reverse
// entry when run.
[[nodiscard]] const std::vector<std::string>& proposition_catalogue();

// Binding slots the given id expects, in order, drawn from "family",
// "second family", "operator", "second operator". Unknown ids throw
// UnknownProposition.
[[nodiscard]] std::vector<std::string> proposition_bindings(const std::string& id);

// Runs one catalogue entry on one instance. Returns one entry per direction.
// Missing bindings throw Error; unknown ids throw UnknownProposition.
[[nodiscard]] std::vector<PropositionCheck> run_check(const std::string& id,
                                                      const Instance& instance,
                                                      const CheckContext& ctx);

// Curated instances per id, exercising the PASS path and at least one
// NOT_APPLICABLE path each.
[[nodiscard]] std::vector<Instance> builtin_instances(const std::string& id);

// Deterministic structured generator: the same (id, seed, index) always
// produces the same instance. Weight patterns are built so that a trajectory
// the conclusion depends on never mimics decay when the hypotheses hold;
// hypothesis flags may still come out false or unknown, which is the point.
[[nodiscard]] Instance random_instance(const std::string& id, std::uint64_t seed,
                                       std::size_t index);

struct SuiteConfig {
  CheckContext ctx;
  std::uint64_t seed = 0;
  std::size_t random_per_prop = 200;
  bool include_builtin = true;
  std::vector<std::string> ids;  // empty selects the whole catalogue
};

struct SuiteReport {
  std::vector<PropositionCheck> checks;
  std::size_t passed = 0;
  std::size_t not_applicable = 0;
  std::size_t falsified = 0;
  std::size_t inconclusive = 0;
};

// Runs the catalogue over built-in and generated instances in a fixed order.
[[nodiscard]] SuiteReport run_all(const SuiteConfig& cfg);

}  // namespace semiframe
