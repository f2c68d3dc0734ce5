#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "semiframe/errors.hpp"

namespace semiframe {

// A finite ladder of truncation dimensions. The asymptotic questions this
// library cares about (boundedness, positive lower bounds, closed range) are
// answered by watching scalar quantities along the ladder, so a ladder needs
// at least three rungs to expose a trend.
class TruncationLadder {
 public:
  explicit TruncationLadder(std::vector<std::size_t> levels);

  [[nodiscard]] const std::vector<std::size_t>& levels() const { return levels_; }
  [[nodiscard]] std::size_t size() const { return levels_.size(); }
  [[nodiscard]] std::size_t last() const { return levels_.back(); }

 private:
  std::vector<std::size_t> levels_;
};

[[nodiscard]] TruncationLadder default_ladder();

enum class Trend { Stable, Vanishing, Diverging, Inconclusive };

[[nodiscard]] std::string to_string(Trend t);

// Thresholds for reading a trend off a trajectory. Defaults match the
// documented report semantics; every knob can be overridden.
struct TrendPolicy {
  double retention = 0.5;     // Stable needs last >= retention * max
  double decay_ratio = 0.9;   // Vanishing: consecutive ratio at most this
  double growth_ratio = 1.1;  // Diverging: consecutive ratio at least this
  double floor = 1e-6;        // below the floor a last value reads as vanishing
  std::size_t window = 3;     // number of trailing steps the ratio tests use
};

// One scalar followed along the ladder, plus the trend read off it.
struct Trajectory {
  std::vector<std::pair<std::size_t, double>> points;  // (level, value)
  Trend trend = Trend::Inconclusive;

  [[nodiscard]] double last_value() const { return points.back().second; }
  [[nodiscard]] double max_value() const;
  [[nodiscard]] double min_value() const;
};

// Reads the trend: Vanishing wins first (floor, then sustained decay),
// then Diverging (sustained growth), then Stable (retention of the max),
// otherwise Inconclusive. An identically zero trajectory is Stable at 0.
// Diverging is tested before Stable because a growing trajectory always
// retains its own maximum.
[[nodiscard]] Trend classify_trend(const std::vector<std::pair<std::size_t, double>>& points,
                                   const TrendPolicy& policy = {});

[[nodiscard]] Trajectory make_trajectory(std::vector<std::pair<std::size_t, double>> points,
                                         const TrendPolicy& policy = {});

}  // namespace semiframe
