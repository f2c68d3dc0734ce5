#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiframe/expr.hpp"
#include "semiframe/linalg.hpp"
#include "semiframe/operator_spec.hpp"

namespace semiframe {

// One nonzero coordinate of a sparse vector.
struct VectorAtom {
  std::size_t coord;  // 0-based ambient coordinate
  Complex weight;
};

// Sparse profile of one vector: its nonzero coordinates. Profiles are only
// tracked while every vector stays this sparse (at most two atoms); beyond
// that the dense representation is authoritative.
using VectorAtoms = std::vector<VectorAtom>;

// A family truncated to one level.
//
// Conventions. The family index runs over the coefficient positions 1..count;
// a weighted-basis family with index map sigma occupies position sigma(n)
// with the vector w(n) e_sigma(n), and positions outside sigma's image hold
// the zero vector. That sparse indexing keeps the coefficient spaces of two
// families comparable (their analysis ranges live in the same C^N), which is
// what makes range disjointness and direct sums meaningful level by level.
//
// space_coords is the declared coordinate subspace the family lives on: all
// of 1..dim for dense kinds, the active positions for an index-mapped basis
// family, and the stacked union for direct sums. Classification is relative
// to this subspace.
struct Materialization {
  std::size_t level = 0;
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Complex>> vectors;  // count x ambient_dim
  std::vector<std::size_t> space_coords;      // sorted, 0-based
  // Per-vector sparse profiles, present while every vector has at most two
  // nonzero coordinates (zero vectors allowed, their list is empty). Absent
  // when some vector is denser than that.
  std::optional<std::vector<VectorAtoms>> atoms;

  [[nodiscard]] std::size_t count() const { return vectors.size(); }
};

class SequenceFamily {
 public:
  // Fixed list of vectors over a native dimension; materialization zero-pads
  // to larger levels and refuses smaller ones.
  [[nodiscard]] static SequenceFamily explicit_vectors(std::vector<std::vector<Complex>> vectors,
                                                       std::string label = {});
  // f at position index(n) equals weight(n) * e_index(n).
  [[nodiscard]] static SequenceFamily weighted_basis(Expr weight, Expr index_map,
                                                     std::string label = {});
  [[nodiscard]] static SequenceFamily operator_image(SequenceFamily base, OperatorSpec op,
                                                     std::string label = {});
  [[nodiscard]] static SequenceFamily pointwise_sum(SequenceFamily lhs, SequenceFamily rhs,
                                                    std::string label = {});
  [[nodiscard]] static SequenceFamily direct_sum_of(SequenceFamily lhs, SequenceFamily rhs,
                                                    std::string label = {});

  [[nodiscard]] const std::string& label() const;

  [[nodiscard]] Materialization materialize(std::size_t level) const;

  // Implementation tree; opaque outside the translation unit that defines it.
  struct Node;

 private:
  explicit SequenceFamily(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Analysis, synthesis and frame matrices of one truncation level.
//   analysis:  count x dim, row n = conjugate of f_n
//   synthesis: dim x count, column n = f_n (adjoint of analysis)
//   frame:     dim x dim, synthesis * analysis (Hermitian, PSD)
struct OperatorTriple {
  ComplexMatrix analysis;
  ComplexMatrix synthesis;
  ComplexMatrix frame;
};

[[nodiscard]] OperatorTriple assemble_triple(const Materialization& mat);

// Triple of the transformed family {L f_n}, computed by operator calculus
// rather than by materializing the image: (C L*, L D, L S L*).
[[nodiscard]] OperatorTriple transformed_triple(const SequenceFamily& family,
                                                const OperatorSpec& op, std::size_t level);

}  // namespace semiframe
