#include "semiframe/operator_spec.hpp"

#include <algorithm>
#include <cmath>

namespace semiframe {

struct OperatorSpec::Node {
  enum class Kind { Diagonal, PermWeighted, Explicit, Sum, IdentityPlus, Adjoint, Compose };
  Kind kind;
  std::string label;
  std::optional<Expr> weight;
  std::optional<Expr> index_map;
  std::function<ComplexMatrix(std::size_t)> rule;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = OperatorSpec::Node;

std::shared_ptr<Node> make_node(Node::Kind kind, std::string label) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->label = std::move(label);
  return node;
}

// Evaluates an index map at n, requiring a positive integer.
std::size_t eval_index(const Expr& map, std::int64_t n) {
  const Rational r = map.eval(n);
  if (!r.is_integer() || r.num < 1)
    throw Error("index map must evaluate to positive integers, got " + r.str() +
                " at n=" + std::to_string(n));
  return static_cast<std::size_t>(r.num);
}

}  // namespace

OperatorSpec OperatorSpec::diagonal(Expr weight, std::string label) {
  auto node = make_node(Node::Kind::Diagonal,
                        label.empty() ? "diag(" + weight.str() + ")" : std::move(label));
  node->weight = std::move(weight);
  return OperatorSpec(std::move(node));
}

OperatorSpec OperatorSpec::identity() { return diagonal(Expr::constant(1), "identity"); }

OperatorSpec OperatorSpec::permutation_weighted(Expr index_map, Expr weight, std::string label) {
  auto node = make_node(Node::Kind::PermWeighted,
                        label.empty() ? "shift(" + index_map.str() + "," + weight.str() + ")"
                                      : std::move(label));
  node->weight = std::move(weight);
  node->index_map = std::move(index_map);
  return OperatorSpec(std::move(node));
}

OperatorSpec OperatorSpec::explicit_rule(std::function<ComplexMatrix(std::size_t)> rule,
                                         std::string label) {
  auto node = make_node(Node::Kind::Explicit, std::move(label));
  node->rule = std::move(rule);
  return OperatorSpec(std::move(node));
}

OperatorSpec OperatorSpec::sum(OperatorSpec lhs, OperatorSpec rhs) {
  auto node = make_node(Node::Kind::Sum, lhs.label() + "+" + rhs.label());
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return OperatorSpec(std::move(node));
}

OperatorSpec OperatorSpec::identity_plus(OperatorSpec op) {
  auto node = make_node(Node::Kind::IdentityPlus, "I+" + op.label());
  node->lhs = std::move(op.node_);
  return OperatorSpec(std::move(node));
}

OperatorSpec OperatorSpec::adjoint(OperatorSpec op) {
  auto node = make_node(Node::Kind::Adjoint, "adj(" + op.label() + ")");
  node->lhs = std::move(op.node_);
  return OperatorSpec(std::move(node));
}

OperatorSpec OperatorSpec::compose(OperatorSpec lhs, OperatorSpec rhs) {
  auto node = make_node(Node::Kind::Compose, lhs.label() + "*" + rhs.label());
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return OperatorSpec(std::move(node));
}

const std::string& OperatorSpec::label() const { return node_->label; }

namespace {

ComplexMatrix realize_node(const Node& node, std::size_t level) {
  const auto d = level;
  switch (node.kind) {
    case Node::Kind::Diagonal: {
      ComplexMatrix m(d, d);
      for (std::size_t j = 0; j < d; ++j)
        m(j, j) = node.weight->eval_double(static_cast<std::int64_t>(j + 1));
      return m;
    }
    case Node::Kind::PermWeighted: {
      ComplexMatrix m(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t row = eval_index(*node.index_map, static_cast<std::int64_t>(j + 1));
        if (row <= d) m(row - 1, j) = node.weight->eval_double(static_cast<std::int64_t>(j + 1));
      }
      return m;
    }
    case Node::Kind::Explicit: {
      ComplexMatrix m = node.rule(d);
      if (m.rows() != d || m.cols() != d)
        throw ShapeError("explicit operator rule returned wrong shape at level " +
                         std::to_string(d));
      return m;
    }
    case Node::Kind::Sum: return realize_node(*node.lhs, d) + realize_node(*node.rhs, d);
    case Node::Kind::IdentityPlus: {
      ComplexMatrix m = realize_node(*node.lhs, d);
      for (std::size_t j = 0; j < d; ++j) m(j, j) += 1.0;
      return m;
    }
    case Node::Kind::Adjoint: return realize_node(*node.lhs, d).adjoint();
    case Node::Kind::Compose:
      return realize_node(*node.lhs, d) * realize_node(*node.rhs, d);
  }
  throw Error("corrupt operator node");
}

// Atomic-structure propagation. Returns nullopt as soon as a column would
// carry two entries or two columns would share a row.
std::optional<AtomicColumns> atomic_node(const Node& node, std::size_t level) {
  const auto d = level;
  auto rows_distinct = [](const AtomicColumns& cols) {
    std::vector<std::size_t> rows;
    for (const auto& atom : cols)
      if (atom && std::abs(atom->weight) != 0.0) rows.push_back(atom->row);
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
  };
  switch (node.kind) {
    case Node::Kind::Diagonal: {
      AtomicColumns cols(d);
      for (std::size_t j = 0; j < d; ++j)
        cols[j] = ColumnAtom{j, node.weight->eval_double(static_cast<std::int64_t>(j + 1))};
      return cols;
    }
    case Node::Kind::PermWeighted: {
      AtomicColumns cols(d);
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t row = eval_index(*node.index_map, static_cast<std::int64_t>(j + 1));
        if (row <= d)
          cols[j] = ColumnAtom{row - 1,
                               node.weight->eval_double(static_cast<std::int64_t>(j + 1))};
      }
      if (!rows_distinct(cols)) return std::nullopt;
      return cols;
    }
    case Node::Kind::Explicit: return std::nullopt;
    case Node::Kind::Sum: {
      auto a = atomic_node(*node.lhs, d);
      auto b = atomic_node(*node.rhs, d);
      if (!a || !b) return std::nullopt;
      AtomicColumns cols(d);
      for (std::size_t j = 0; j < d; ++j) {
        const auto& x = (*a)[j];
        const auto& y = (*b)[j];
        if (x && y) {
          if (x->row != y->row) return std::nullopt;
          cols[j] = ColumnAtom{x->row, x->weight + y->weight};
        } else {
          cols[j] = x ? x : y;
        }
      }
      if (!rows_distinct(cols)) return std::nullopt;
      return cols;
    }
    case Node::Kind::IdentityPlus: {
      auto a = atomic_node(*node.lhs, d);
      if (!a) return std::nullopt;
      AtomicColumns cols(d);
      for (std::size_t j = 0; j < d; ++j) {
        const auto& x = (*a)[j];
        if (x && x->row != j) return std::nullopt;  // off-diagonal entry joins the 1
        cols[j] = ColumnAtom{j, Complex(1.0, 0.0) + (x ? x->weight : Complex(0.0, 0.0))};
      }
      return cols;
    }
    case Node::Kind::Adjoint: {
      auto a = atomic_node(*node.lhs, d);
      if (!a) return std::nullopt;
      AtomicColumns cols(d);
      for (std::size_t j = 0; j < d; ++j) {
        const auto& x = (*a)[j];
        // Zero-weight atoms are structurally absent; skipping them keeps a
        // nonzero entry from being overwritten when rows coincide only
        // through zeros.
        if (x && std::abs(x->weight) != 0.0) cols[x->row] = ColumnAtom{j, std::conj(x->weight)};
      }
      return cols;
    }
    case Node::Kind::Compose: {
      auto a = atomic_node(*node.lhs, d);
      auto b = atomic_node(*node.rhs, d);
      if (!a || !b) return std::nullopt;
      AtomicColumns cols(d);
      for (std::size_t j = 0; j < d; ++j) {
        const auto& y = (*b)[j];
        if (!y) continue;
        const auto& x = (*a)[y->row];
        if (!x) continue;
        cols[j] = ColumnAtom{x->row, x->weight * y->weight};
      }
      if (!rows_distinct(cols)) return std::nullopt;
      return cols;
    }
  }
  return std::nullopt;
}

}  // namespace

ComplexMatrix OperatorSpec::realize(std::size_t level) const {
  if (level == 0) throw Error("operator truncation needs a positive level");
  return realize_node(*node_, level);
}

std::optional<AtomicColumns> OperatorSpec::atomic_columns(std::size_t level) const {
  if (level == 0) throw Error("operator truncation needs a positive level");
  return atomic_node(*node_, level);
}

SpectralReport spectral_report(const OperatorSpec& op, std::size_t level,
                               const RankPolicy& policy) {
  SpectralReport rep;
  rep.level = level;
  std::vector<double> sigmas;
  if (auto atoms = op.atomic_columns(level)) {
    sigmas.reserve(level);
    for (const auto& atom : *atoms) sigmas.push_back(atom ? std::abs(atom->weight) : 0.0);
    std::sort(sigmas.rbegin(), sigmas.rend());
  } else {
    sigmas = svd(op.realize(level)).singular_values;
  }
  rep.sigma_max = sigmas.empty() ? 0.0 : sigmas.front();
  rep.sigma_min = sigmas.empty() ? 0.0 : sigmas.back();
  const double cutoff = policy.cutoff(level, level, rep.sigma_max);
  rep.gamma = 0.0;
  for (const double s : sigmas) {
    if (s > cutoff) {
      rep.rank += 1;
      rep.gamma = s;  // sigmas are descending, so the last one above wins
    }
  }
  rep.injective = rep.rank == level;
  rep.surjective = rep.rank == level;
  return rep;
}

Trajectory gamma_ladder(const OperatorSpec& op, const TruncationLadder& ladder,
                        const RankPolicy& rank_policy, const TrendPolicy& trend_policy) {
  std::vector<std::pair<std::size_t, double>> points;
  points.reserve(ladder.size());
  for (const std::size_t level : ladder.levels())
    points.emplace_back(level, spectral_report(op, level, rank_policy).gamma);
  return make_trajectory(std::move(points), trend_policy);
}

DensityReport density_diagnostic(const OperatorSpec& op, const TruncationLadder& ladder,
                                 const RankPolicy& rank_policy,
                                 const TrendPolicy& trend_policy) {
  const OperatorSpec adj = OperatorSpec::adjoint(op);
  DensityReport rep;
  bool injective_all = true;
  bool surjective_all = true;
  std::vector<std::pair<std::size_t, double>> gamma_points;
  for (const std::size_t level : ladder.levels()) {
    SpectralReport s = spectral_report(adj, level, rank_policy);
    injective_all = injective_all && s.injective;
    surjective_all = surjective_all && s.surjective;
    gamma_points.emplace_back(level, s.gamma);
    rep.adjoint_levels.push_back(std::move(s));
  }
  rep.adjoint_gamma = make_trajectory(std::move(gamma_points), trend_policy);
  rep.range_dense = injective_all;
  rep.adjoint_range_closed =
      rep.adjoint_gamma.trend == Trend::Stable || rep.adjoint_gamma.trend == Trend::Diverging;
  rep.adjoint_range_full = surjective_all && rep.adjoint_range_closed;
  return rep;
}

}  // namespace semiframe
