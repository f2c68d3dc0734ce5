#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiframe/expr.hpp"
#include "semiframe/ladder.hpp"
#include "semiframe/linalg.hpp"

namespace semiframe {

// One nonzero entry of an otherwise zero matrix column: weight * e_row.
struct ColumnAtom {
  std::size_t row;
  Complex weight;
};

// Per-column structure of a matrix in which every column holds at most one
// nonzero entry and the occupied rows are pairwise distinct. Such matrices
// have an exactly known singular spectrum (the absolute weights plus zeros),
// which the spectral routines exploit. An empty optional entry is a zero
// column.
using AtomicColumns = std::vector<std::optional<ColumnAtom>>;

// Symbolic description of a densely defined operator, evaluated on demand as
// its level x level leading truncation. Specs compose (sum, adjoint, product,
// I + L) without losing the ability to realize any level of the ladder.
class OperatorSpec {
 public:
  [[nodiscard]] static OperatorSpec diagonal(Expr weight, std::string label = {});
  [[nodiscard]] static OperatorSpec identity();
  [[nodiscard]] static OperatorSpec permutation_weighted(Expr index_map, Expr weight,
                                                         std::string label = {});
  [[nodiscard]] static OperatorSpec explicit_rule(
      std::function<ComplexMatrix(std::size_t)> rule, std::string label);
  [[nodiscard]] static OperatorSpec sum(OperatorSpec lhs, OperatorSpec rhs);
  [[nodiscard]] static OperatorSpec identity_plus(OperatorSpec op);
  [[nodiscard]] static OperatorSpec adjoint(OperatorSpec op);
  // compose(a, b) realizes as realize(a) * realize(b), i.e. "a after b".
  [[nodiscard]] static OperatorSpec compose(OperatorSpec lhs, OperatorSpec rhs);

  [[nodiscard]] const std::string& label() const;

  // Leading level x level truncation of the formal infinite matrix.
  [[nodiscard]] ComplexMatrix realize(std::size_t level) const;

  // Column structure when the truncation is atomic (see AtomicColumns);
  // nullopt when it is not, in which case callers fall back to dense paths.
  [[nodiscard]] std::optional<AtomicColumns> atomic_columns(std::size_t level) const;

  // Implementation tree; opaque outside the translation unit that defines it.
  struct Node;

 private:
  explicit OperatorSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Singular data of one truncation level.
struct SpectralReport {
  std::size_t level = 0;
  double sigma_min = 0.0;  // smallest singular value, zeros included
  double sigma_max = 0.0;
  double gamma = 0.0;      // smallest singular value above the rank cutoff
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
};

[[nodiscard]] SpectralReport spectral_report(const OperatorSpec& op, std::size_t level,
                                             const RankPolicy& policy = {});

// gamma followed along the ladder. A STABLE or DIVERGING verdict is the
// finite-truncation proxy for closed range; VANISHING signals a range that
// fails to be closed.
[[nodiscard]] Trajectory gamma_ladder(const OperatorSpec& op, const TruncationLadder& ladder,
                                      const RankPolicy& rank_policy = {},
                                      const TrendPolicy& trend_policy = {});

// Density and closedness proxies read off the adjoint truncations:
// the range of L is dense exactly when L* is injective, and the range of L*
// is closed exactly when gamma(L*) stays away from zero along the ladder.
struct DensityReport {
  bool range_dense = false;           // adjoint injective at every level
  bool adjoint_range_closed = false;  // gamma(L*) trend in {STABLE, DIVERGING}
  bool adjoint_range_full = false;    // adjoint surjective everywhere and range closed
  std::vector<SpectralReport> adjoint_levels;
  Trajectory adjoint_gamma;
};

[[nodiscard]] DensityReport density_diagnostic(const OperatorSpec& op,
                                               const TruncationLadder& ladder,
                                               const RankPolicy& rank_policy = {},
                                               const TrendPolicy& trend_policy = {});

}  // namespace semiframe
