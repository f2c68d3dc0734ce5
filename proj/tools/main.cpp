#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semiframe/errors.hpp"
#include "semiframe/report.hpp"

namespace {

using namespace semiframe;

// Exit contract: 0 clean, 2 when a proposition check is falsified, 3 for
// configuration problems (bad flags, unreadable or invalid scenario, no task
// matching the subcommand).
constexpr int kExitOk = 0;
constexpr int kExitFalsified = 2;
constexpr int kExitConfig = 3;

struct Options {
  std::string scenario_path;
  std::vector<std::size_t> ladder_levels;
  std::uint64_t seed = 0;
  std::size_t random_per_prop = 200;
  std::optional<double> tol_abs;
  bool json = false;
};

void add_common_flags(CLI::App* sub, Options& o) {
  sub->add_option("--ladder", o.ladder_levels,
                  "Truncation levels, comma separated (default 8,16,32,64,128)")
      ->delimiter(',');
  sub->add_option("--seed", o.seed, "Seed for generated proposition instances");
  sub->add_option("--random-per-prop", o.random_per_prop,
                  "Generated instances per proposition in check_all tasks");
  sub->add_option("--tol-abs", o.tol_abs,
                  "Absolute singular value cutoff for rank decisions (default: scaled machine epsilon)");
  sub->add_flag("--json", o.json,
                "Write the JSON document to stdout and the human report to stderr");
}

RunConfig make_config(const Options& o, const TruncationLadder& fallback) {
  RunConfig cfg;
  cfg.ctx.ladder = o.ladder_levels.empty() ? fallback : TruncationLadder(o.ladder_levels);
  cfg.seed = o.seed;
  cfg.random_per_prop = o.random_per_prop;
  cfg.ctx.rank.absolute = o.tol_abs;
  return cfg;
}

void emit(const Json& doc, const std::string& human, bool json) {
  if (json) {
    std::cout << doc.dump(2) << "\n";
    std::cerr << human;
  } else {
    std::cout << human;
  }
}

int run_slice(const Options& o, const std::vector<TaskKind>& kinds) {
  std::ifstream in(o.scenario_path);
  if (!in) {
    std::cerr << "error: cannot read scenario file '" << o.scenario_path << "'\n";
    return kExitConfig;
  }
  std::ostringstream text;
  text << in.rdbuf();

  const Scenario scenario = parse_scenario(text.str());
  const RunConfig cfg = make_config(o, scenario.ladder);
  const ScenarioReport report = run_scenario(scenario, kinds, cfg);
  if (report.tasks_run == 0) {
    std::cerr << "error: scenario '" << o.scenario_path
              << "' has no task for this subcommand\n";
    return kExitConfig;
  }
  emit(report.json, report.human, o.json);
  return report.falsified > 0 ? kExitFalsified : kExitOk;
}

int run_reproduce(const Options& o) {
  Json doc;
  doc["report"] = "reproduce-paper";
  Json scenarios = Json::array();
  std::string human;
  std::size_t falsified = 0;
  std::size_t inconclusive = 0;

  for (const std::string& name : builtin_scenario_names()) {
    const Scenario scenario = builtin_scenario(name);
    const RunConfig cfg = make_config(o, scenario.ladder);
    const ScenarioReport report = run_scenario(scenario, {}, cfg);
    falsified += report.falsified;
    inconclusive += report.inconclusive;

    Json entry;
    entry["name"] = name;
    entry["notes"] = reproduce_notes(name);
    entry["run"] = report.json;
    scenarios.push_back(std::move(entry));

    human += "=== " + name + " ===\n";
    for (const std::string& note : reproduce_notes(name)) {
      human += "note: " + note + "\n";
    }
    human += report.human;
    human += "\n";
  }
  doc["scenarios"] = std::move(scenarios);
  doc["summary"] = Json{{"falsified", falsified}, {"inconclusive", inconclusive}};
  human += "scenarios: " + std::to_string(builtin_scenario_names().size()) +
           ", falsified: " + std::to_string(falsified) +
           ", inconclusive: " + std::to_string(inconclusive) + "\n";

  emit(doc, human, o.json);
  return falsified > 0 ? kExitFalsified : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classifies sequences in separable Hilbert spaces along finite truncation "
      "ladders and checks the catalogued implications on concrete instances."};
  app.require_subcommand(1);

  Options classify_opts, transform_opts, direct_opts, check_opts, repro_opts;

  CLI::App* classify = app.add_subcommand(
      "classify", "Run classification, spectral and density tasks of a scenario");
  classify->add_option("scenario", classify_opts.scenario_path, "Scenario file")->required();
  add_common_flags(classify, classify_opts);

  CLI::App* transform = app.add_subcommand("transform", "Run the transform tasks of a scenario");
  transform->add_option("scenario", transform_opts.scenario_path, "Scenario file")->required();
  add_common_flags(transform, transform_opts);

  CLI::App* direct = app.add_subcommand("direct-sum", "Run the direct sum tasks of a scenario");
  direct->add_option("scenario", direct_opts.scenario_path, "Scenario file")->required();
  add_common_flags(direct, direct_opts);

  CLI::App* check = app.add_subcommand("check", "Run the proposition check tasks of a scenario");
  check->add_option("scenario", check_opts.scenario_path, "Scenario file")->required();
  add_common_flags(check, check_opts);

  CLI::App* repro = app.add_subcommand(
      "reproduce-paper", "Replay the built-in demonstration scenarios with their notes");
  add_common_flags(repro, repro_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (classify->parsed()) {
      return run_slice(classify_opts,
                       {TaskKind::Classify, TaskKind::ClassifySequence, TaskKind::RfCheck,
                        TaskKind::Spectral, TaskKind::Density});
    }
    if (transform->parsed()) {
      return run_slice(transform_opts, {TaskKind::Transform});
    }
    if (direct->parsed()) {
      return run_slice(direct_opts, {TaskKind::DirectSum});
    }
    if (check->parsed()) {
      return run_slice(check_opts, {TaskKind::Check, TaskKind::CheckAll});
    }
    return run_reproduce(repro_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
