#include "semiframe/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace semiframe {

struct SequenceFamily::Node {
  enum class Kind { Explicit, WeightedBasis, OperatorImage, PointwiseSum, DirectSum };
  Kind kind;
  std::string label;
  std::vector<std::vector<Complex>> vectors;  // Explicit
  std::optional<Expr> weight;                 // WeightedBasis
  std::optional<Expr> index_map;              // WeightedBasis
  std::optional<OperatorSpec> op;             // OperatorImage
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = SequenceFamily::Node;

std::shared_ptr<Node> make_node(Node::Kind kind, std::string label) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->label = std::move(label);
  return node;
}

// How far past the level the index scan looks. Index maps that reach a
// position k only from n > k + kIndexScanMargin are rejected as overflowing.
constexpr std::size_t kIndexScanMargin = 512;

// Sparse profiles stop being tracked beyond this many nonzeros per vector.
constexpr std::size_t kMaxAtoms = 2;

std::vector<std::size_t> full_coords(std::size_t dim) {
  std::vector<std::size_t> coords(dim);
  for (std::size_t i = 0; i < dim; ++i) coords[i] = i;
  return coords;
}

std::optional<std::vector<VectorAtoms>> scan_atoms(
    const std::vector<std::vector<Complex>>& vectors) {
  std::vector<VectorAtoms> atoms(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t c = 0; c < vectors[i].size(); ++c) {
      if (std::abs(vectors[i][c]) == 0.0) continue;
      if (atoms[i].size() == kMaxAtoms) return std::nullopt;
      atoms[i].push_back(VectorAtom{c, vectors[i][c]});
    }
  }
  return atoms;
}

Materialization materialize_node(const Node& node, std::size_t level);

Materialization materialize_weighted_basis(const Node& node, std::size_t level) {
  Materialization mat;
  mat.level = level;
  mat.ambient_dim = level;
  mat.vectors.assign(level, std::vector<Complex>(level, Complex(0.0, 0.0)));
  std::vector<VectorAtoms> atoms(level);

  // Collect every index n whose mapped position lands inside the level.
  std::map<std::size_t, std::int64_t> position_to_index;
  for (std::int64_t n = 1; n <= static_cast<std::int64_t>(level + kIndexScanMargin); ++n) {
    const Rational r = node.index_map->eval(n);
    if (!r.is_integer() || r.num < 1)
      throw Error("index map must evaluate to positive integers, got " + r.str() +
                  " at n=" + std::to_string(n));
    const auto pos = static_cast<std::size_t>(r.num);
    if (pos > level) continue;
    const auto [it, inserted] = position_to_index.emplace(pos, n);
    if (!inserted)
      throw Error("index map not injective: position " + std::to_string(pos) +
                  " reached from n=" + std::to_string(it->second) + " and n=" +
                  std::to_string(n));
  }
  if (position_to_index.empty())
    throw TruncationOverflow("index map exceeds level " + std::to_string(level) +
                             ": no position is reachable");

  for (const auto& [pos, n] : position_to_index) {
    const Complex w = node.weight->eval_double(n);
    mat.vectors[pos - 1][pos - 1] = w;
    if (std::abs(w) != 0.0) atoms[pos - 1].push_back(VectorAtom{pos - 1, w});
    mat.space_coords.push_back(pos - 1);
  }
  mat.atoms = std::move(atoms);
  return mat;
}

Materialization materialize_explicit(const Node& node, std::size_t level) {
  const std::size_t native = node.vectors.empty() ? 0 : node.vectors.front().size();
  if (level < native)
    throw TruncationOverflow("explicit family has dimension " + std::to_string(native) +
                             ", cannot truncate to level " + std::to_string(level));
  Materialization mat;
  mat.level = level;
  mat.ambient_dim = level;
  mat.space_coords = full_coords(level);
  mat.vectors.reserve(node.vectors.size());
  for (const auto& v : node.vectors) {
    std::vector<Complex> padded(level, Complex(0.0, 0.0));
    std::copy(v.begin(), v.end(), padded.begin());
    mat.vectors.push_back(std::move(padded));
  }
  mat.atoms = scan_atoms(mat.vectors);
  return mat;
}

Materialization materialize_image(const Node& node, std::size_t level) {
  Materialization base = materialize_node(*node.lhs, level);
  Materialization mat;
  mat.level = level;
  mat.ambient_dim = base.ambient_dim;
  mat.space_coords = full_coords(base.ambient_dim);

  const auto atomic_op = node.op->atomic_columns(base.ambient_dim);
  if (base.atoms && atomic_op) {
    mat.vectors.assign(base.count(), std::vector<Complex>(base.ambient_dim, Complex(0.0, 0.0)));
    std::vector<VectorAtoms> atoms(base.count());
    for (std::size_t i = 0; i < base.count(); ++i) {
      for (const VectorAtom& a : (*base.atoms)[i]) {
        const auto& col = (*atomic_op)[a.coord];
        if (!col) continue;
        const Complex w = a.weight * col->weight;
        if (std::abs(w) == 0.0) continue;
        mat.vectors[i][col->row] += w;
        atoms[i].push_back(VectorAtom{col->row, w});
      }
    }
    mat.atoms = std::move(atoms);
    return mat;
  }

  const ComplexMatrix op_matrix = node.op->realize(base.ambient_dim);
  mat.vectors.reserve(base.count());
  for (const auto& v : base.vectors) mat.vectors.push_back(op_matrix.apply(v));
  mat.atoms = scan_atoms(mat.vectors);
  return mat;
}

Materialization materialize_pointwise_sum(const Node& node, std::size_t level) {
  Materialization a = materialize_node(*node.lhs, level);
  Materialization b = materialize_node(*node.rhs, level);
  if (a.ambient_dim != b.ambient_dim)
    throw ShapeError("pointwise sum: ambient dimensions differ");
  if (a.count() != b.count()) throw ShapeError("pointwise sum: family sizes differ");

  Materialization mat;
  mat.level = level;
  mat.ambient_dim = a.ambient_dim;
  std::vector<std::size_t> coords;
  std::set_union(a.space_coords.begin(), a.space_coords.end(), b.space_coords.begin(),
                 b.space_coords.end(), std::back_inserter(coords));
  mat.space_coords = std::move(coords);
  mat.vectors = std::move(a.vectors);
  for (std::size_t i = 0; i < mat.vectors.size(); ++i)
    for (std::size_t c = 0; c < mat.ambient_dim; ++c) mat.vectors[i][c] += b.vectors[i][c];

  if (a.atoms && b.atoms) {
    std::vector<VectorAtoms> atoms(mat.vectors.size());
    bool sparse = true;
    for (std::size_t i = 0; i < mat.vectors.size() && sparse; ++i) {
      std::map<std::size_t, Complex> merged;
      for (const VectorAtom& x : (*a.atoms)[i]) merged[x.coord] += x.weight;
      for (const VectorAtom& y : (*b.atoms)[i]) merged[y.coord] += y.weight;
      for (const auto& [coord, w] : merged) {
        if (std::abs(w) == 0.0) continue;
        if (atoms[i].size() == kMaxAtoms) {
          sparse = false;
          break;
        }
        atoms[i].push_back(VectorAtom{coord, w});
      }
    }
    if (sparse) mat.atoms = std::move(atoms);
  }
  return mat;
}

Materialization materialize_direct_sum(const Node& node, std::size_t level) {
  Materialization a = materialize_node(*node.lhs, level);
  Materialization b = materialize_node(*node.rhs, level);
  if (a.count() != b.count()) throw ShapeError("direct sum: family sizes differ");

  Materialization mat;
  mat.level = level;
  mat.ambient_dim = a.ambient_dim + b.ambient_dim;
  mat.vectors.assign(a.count(), std::vector<Complex>(mat.ambient_dim, Complex(0.0, 0.0)));
  for (std::size_t i = 0; i < a.count(); ++i) {
    std::copy(a.vectors[i].begin(), a.vectors[i].end(), mat.vectors[i].begin());
    std::copy(b.vectors[i].begin(), b.vectors[i].end(),
              mat.vectors[i].begin() + static_cast<std::ptrdiff_t>(a.ambient_dim));
  }
  mat.space_coords = a.space_coords;
  for (const std::size_t c : b.space_coords) mat.space_coords.push_back(c + a.ambient_dim);

  if (a.atoms && b.atoms) {
    std::vector<VectorAtoms> atoms(mat.vectors.size());
    bool sparse = true;
    for (std::size_t i = 0; i < mat.vectors.size() && sparse; ++i) {
      const auto& xs = (*a.atoms)[i];
      const auto& ys = (*b.atoms)[i];
      if (xs.size() + ys.size() > kMaxAtoms) {
        sparse = false;
        break;
      }
      atoms[i] = xs;
      for (const VectorAtom& y : ys) atoms[i].push_back(VectorAtom{y.coord + a.ambient_dim, y.weight});
    }
    if (sparse) mat.atoms = std::move(atoms);
  }
  return mat;
}

Materialization materialize_node(const Node& node, std::size_t level) {
  switch (node.kind) {
    case Node::Kind::Explicit: return materialize_explicit(node, level);
    case Node::Kind::WeightedBasis: return materialize_weighted_basis(node, level);
    case Node::Kind::OperatorImage: return materialize_image(node, level);
    case Node::Kind::PointwiseSum: return materialize_pointwise_sum(node, level);
    case Node::Kind::DirectSum: return materialize_direct_sum(node, level);
  }
  throw Error("corrupt family node");
}

}  // namespace

SequenceFamily SequenceFamily::explicit_vectors(std::vector<std::vector<Complex>> vectors,
                                                std::string label) {
  if (vectors.empty()) throw Error("explicit family needs at least one vector");
  const std::size_t dim = vectors.front().size();
  if (dim == 0) throw Error("explicit family vectors need positive dimension");
  for (const auto& v : vectors)
    if (v.size() != dim) throw ShapeError("explicit family vectors differ in dimension");
  auto node = make_node(Node::Kind::Explicit,
                        label.empty() ? "explicit[" + std::to_string(vectors.size()) + "]"
                                      : std::move(label));
  node->vectors = std::move(vectors);
  return SequenceFamily(std::move(node));
}

SequenceFamily SequenceFamily::weighted_basis(Expr weight, Expr index_map, std::string label) {
  auto node = make_node(Node::Kind::WeightedBasis,
                        label.empty() ? "{(" + weight.str() + ")e(" + index_map.str() + ")}"
                                      : std::move(label));
  node->weight = std::move(weight);
  node->index_map = std::move(index_map);
  return SequenceFamily(std::move(node));
}

SequenceFamily SequenceFamily::operator_image(SequenceFamily base, OperatorSpec op,
                                              std::string label) {
  auto node = make_node(Node::Kind::OperatorImage,
                        label.empty() ? op.label() + "[" + base.label() + "]"
                                      : std::move(label));
  node->lhs = std::move(base.node_);
  node->op = std::move(op);
  return SequenceFamily(std::move(node));
}

SequenceFamily SequenceFamily::pointwise_sum(SequenceFamily lhs, SequenceFamily rhs,
                                             std::string label) {
  auto node = make_node(Node::Kind::PointwiseSum,
                        label.empty() ? lhs.label() + "+" + rhs.label() : std::move(label));
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return SequenceFamily(std::move(node));
}

SequenceFamily SequenceFamily::direct_sum_of(SequenceFamily lhs, SequenceFamily rhs,
                                             std::string label) {
  auto node = make_node(Node::Kind::DirectSum,
                        label.empty() ? lhs.label() + "(+)" + rhs.label() : std::move(label));
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return SequenceFamily(std::move(node));
}

const std::string& SequenceFamily::label() const { return node_->label; }

Materialization SequenceFamily::materialize(std::size_t level) const {
  if (level < 2) throw Error("materialization needs level >= 2");
  return materialize_node(*node_, level);
}

OperatorTriple assemble_triple(const Materialization& mat) {
  OperatorTriple triple;
  triple.analysis = ComplexMatrix(mat.count(), mat.ambient_dim);
  for (std::size_t n = 0; n < mat.count(); ++n)
    for (std::size_t c = 0; c < mat.ambient_dim; ++c)
      triple.analysis(n, c) = std::conj(mat.vectors[n][c]);
  triple.synthesis = triple.analysis.adjoint();
  triple.frame = triple.synthesis * triple.analysis;
  return triple;
}

OperatorTriple transformed_triple(const SequenceFamily& family, const OperatorSpec& op,
                                  std::size_t level) {
  const Materialization mat = family.materialize(level);
  const OperatorTriple base = assemble_triple(mat);
  const ComplexMatrix l = op.realize(mat.ambient_dim);
  const ComplexMatrix l_star = l.adjoint();
  OperatorTriple triple;
  triple.analysis = base.analysis * l_star;
  triple.synthesis = l * base.synthesis;
  triple.frame = l * base.frame * l_star;
  return triple;
}

}  // namespace semiframe
