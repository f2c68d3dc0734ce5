#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiframe/classify.hpp"
#include "semiframe/direct_sum.hpp"
#include "semiframe/operator_spec.hpp"
#include "semiframe/propositions.hpp"
#include "semiframe/scenario.hpp"
#include "semiframe/transforms.hpp"

namespace semiframe {

using Json = nlohmann::ordered_json;

// Every number is rounded to 12 significant digits before it reaches either
// output, so the JSON document and the human report always agree and two runs
// with the same seed and configuration are byte-identical.
[[nodiscard]] std::string fmt_sig(double x);
[[nodiscard]] double round_sig(double x);

struct RunConfig {
  CheckContext ctx;
  std::uint64_t seed = 0;
  std::size_t random_per_prop = 200;
};

// Json views of the core result records. The report builds on these and the
// tests pin their shape.
[[nodiscard]] Json to_json(const BoundsEstimate& b);
[[nodiscard]] Json to_json(const Trajectory& t);
[[nodiscard]] Json to_json(const LadderVerdict& v);
[[nodiscard]] Json to_json(const SpectralReport& r);
[[nodiscard]] Json to_json(const DensityReport& r);
[[nodiscard]] Json to_json(const DisjointnessReport& r);
[[nodiscard]] Json to_json(const PropositionCheck& c);

// Caveat attached to every classification section: a verdict at the top of
// the ladder is an asymptotic reading, not a statement about one level.
[[nodiscard]] const std::string& truncation_caveat();

struct TaskResult {
  Json json;
  std::string human;
  std::size_t falsified = 0;
  std::size_t inconclusive = 0;
};

[[nodiscard]] TaskResult run_task(const Scenario& s, const ScenarioTask& task,
                                  const RunConfig& cfg);

struct ScenarioReport {
  Json json;
  std::string human;
  std::size_t tasks_run = 0;
  std::size_t falsified = 0;
  std::size_t inconclusive = 0;
};

// Runs the scenario's tasks in order, keeping only the kinds listed (an
// empty filter keeps everything), and assembles the two report forms.
[[nodiscard]] ScenarioReport run_scenario(const Scenario& s, const std::vector<TaskKind>& kinds,
                                          const RunConfig& cfg);

// Observation notes attached to the built-in demonstration scenarios when
// they are replayed: places where the computed numbers disagree with the
// figures the construction is usually displayed with.
[[nodiscard]] std::vector<std::string> reproduce_notes(const std::string& scenario_name);

}  // namespace semiframe
