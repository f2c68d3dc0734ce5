#include "semiframe/ladder.hpp"

#include <algorithm>

namespace semiframe {

TruncationLadder::TruncationLadder(std::vector<std::size_t> levels)
    : levels_(std::move(levels)) {
  if (levels_.size() < 3) throw Error("truncation ladder needs at least 3 levels");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] < 2) throw Error("truncation ladder levels must be at least 2");
    if (i > 0 && levels_[i] <= levels_[i - 1])
      throw Error("truncation ladder levels must be strictly increasing");
  }
}

TruncationLadder default_ladder() { return TruncationLadder({8, 16, 32, 64, 128}); }

std::string to_string(Trend t) {
  switch (t) {
    case Trend::Stable: return "STABLE";
    case Trend::Vanishing: return "VANISHING";
    case Trend::Diverging: return "DIVERGING";
    case Trend::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

double Trajectory::max_value() const {
  double m = points.front().second;
  for (const auto& [_, v] : points) m = std::max(m, v);
  return m;
}

double Trajectory::min_value() const {
  double m = points.front().second;
  for (const auto& [_, v] : points) m = std::min(m, v);
  return m;
}

Trend classify_trend(const std::vector<std::pair<std::size_t, double>>& points,
                     const TrendPolicy& policy) {
  if (points.size() < 2) return Trend::Inconclusive;
  double maxv = 0.0;
  for (const auto& [_, v] : points) maxv = std::max(maxv, v);
  const double last = points.back().second;

  // A quantity that is zero at every level has settled; treat it as stable.
  if (maxv == 0.0) return Trend::Stable;
  if (last < policy.floor) return Trend::Vanishing;

  const std::size_t steps = points.size() - 1;
  const std::size_t window = std::min(policy.window, steps);
  bool decaying = true;
  bool growing = true;
  for (std::size_t k = points.size() - window; k < points.size(); ++k) {
    const double prev = points[k - 1].second;
    const double next = points[k].second;
    if (prev <= 0.0) {
      decaying = decaying && (next <= 0.0);
      growing = growing && (next > 0.0);
      continue;
    }
    const double ratio = next / prev;
    decaying = decaying && (ratio <= policy.decay_ratio);
    growing = growing && (ratio >= policy.growth_ratio);
  }
  if (decaying) return Trend::Vanishing;
  if (growing) return Trend::Diverging;
  if (last >= policy.retention * maxv && last >= policy.floor) return Trend::Stable;
  return Trend::Inconclusive;
}

Trajectory make_trajectory(std::vector<std::pair<std::size_t, double>> points,
                           const TrendPolicy& policy) {
  Trajectory t;
  t.points = std::move(points);
  t.trend = classify_trend(t.points, policy);
  return t;
}

}  // namespace semiframe
