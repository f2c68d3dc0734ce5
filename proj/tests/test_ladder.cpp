#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semiframe/errors.hpp"
#include "semiframe/ladder.hpp"

using namespace semiframe;

namespace {

std::vector<std::pair<std::size_t, double>> traj(std::initializer_list<double> values) {
  std::vector<std::pair<std::size_t, double>> points;
  std::size_t level = 8;
  for (double v : values) {
    points.emplace_back(level, v);
    level *= 2;
  }
  return points;
}

}  // namespace

TEST_CASE("ladder construction enforces shape") {
  CHECK_THROWS_AS(TruncationLadder({8, 16}), Error);
  CHECK_THROWS_AS(TruncationLadder({8, 16, 16}), Error);
  CHECK_THROWS_AS(TruncationLadder({8, 4, 16}), Error);
  CHECK_THROWS_AS(TruncationLadder({1, 2, 3}), Error);
  const TruncationLadder ok({4, 8, 12});
  CHECK(ok.size() == 3);
  CHECK(ok.last() == 12);
}

TEST_CASE("default ladder runs 8 to 128") {
  CHECK(default_ladder().levels() == std::vector<std::size_t>{8, 16, 32, 64, 128});
}

TEST_CASE("identically zero trajectory is stable at zero") {
  CHECK(classify_trend(traj({0, 0, 0, 0, 0})) == Trend::Stable);
}

TEST_CASE("a final value below the floor reads as vanishing") {
  CHECK(classify_trend(traj({1e-3, 1e-4, 1e-6, 1e-7, 1e-8})) == Trend::Vanishing);
  // even when the shape holds steady
  CHECK(classify_trend(traj({5e-7, 5e-7, 5e-7, 5e-7, 5e-7})) == Trend::Vanishing);
}

TEST_CASE("sustained decay reads as vanishing before the floor is reached") {
  CHECK(classify_trend(traj({1.0, 0.5, 0.25, 0.125, 0.0625})) == Trend::Vanishing);
  CHECK(classify_trend(traj({64, 16, 4, 1, 0.25})) == Trend::Vanishing);
}

TEST_CASE("sustained growth reads as diverging") {
  CHECK(classify_trend(traj({64, 256, 1024, 4096, 16384})) == Trend::Diverging);
  CHECK(classify_trend(traj({1, 1.5, 2.25, 3.375, 5.0625})) == Trend::Diverging);
}

TEST_CASE("retention of the maximum reads as stable") {
  CHECK(classify_trend(traj({1, 1, 1, 1, 1})) == Trend::Stable);
  CHECK(classify_trend(traj({2, 1.8, 1.6, 1.5, 1.45})) == Trend::Stable);
}

TEST_CASE("mixed movement with heavy loss is inconclusive") {
  // drops to a third of the maximum without a sustained ratio pattern
  CHECK(classify_trend(traj({1.0, 0.3, 0.35, 0.3, 0.32})) == Trend::Inconclusive);
}

TEST_CASE("decay precedence beats retention when both match") {
  // still above half the maximum, but every trailing ratio is below 0.9
  CHECK(classify_trend(traj({1.0, 0.881, 0.75, 0.638, 0.542})) == Trend::Vanishing);
}

TEST_CASE("growth is tested before retention") {
  // a growing trajectory always retains its own maximum; it must not read stable
  CHECK(classify_trend(traj({1, 2, 4, 8, 16})) == Trend::Diverging);
}

TEST_CASE("policy knobs change the verdict") {
  TrendPolicy strict;
  strict.retention = 0.99;
  CHECK(classify_trend(traj({1.0, 0.98, 0.97, 0.97, 0.97}), strict) == Trend::Inconclusive);
  TrendPolicy loose;
  loose.retention = 0.25;
  CHECK(classify_trend(traj({1.0, 0.3, 0.35, 0.3, 0.32}), loose) == Trend::Stable);
}

TEST_CASE("make_trajectory stores points and verdict together") {
  const Trajectory t = make_trajectory(traj({1, 1, 1, 1, 1}));
  CHECK(t.trend == Trend::Stable);
  CHECK(t.points.size() == 5);
  CHECK(t.last_value() == 1.0);
  CHECK(t.max_value() == 1.0);
  CHECK(t.min_value() == 1.0);
}

TEST_CASE("trend names match the report vocabulary") {
  CHECK(to_string(Trend::Stable) == "STABLE");
  CHECK(to_string(Trend::Vanishing) == "VANISHING");
  CHECK(to_string(Trend::Diverging) == "DIVERGING");
  CHECK(to_string(Trend::Inconclusive) == "INCONCLUSIVE");
}
