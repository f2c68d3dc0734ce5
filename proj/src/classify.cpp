#include "semiframe/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

namespace semiframe {

namespace {

struct ExactSpectra {
  std::vector<double> s_eigs;  // eigenvalues of the frame operator on K
  double rf = 0.0;             // smallest Gram eigenvalue
};

bool coords_cover(const std::vector<std::size_t>& coords, const std::vector<VectorAtoms>& atoms) {
  for (const auto& list : atoms)
    for (const VectorAtom& a : list)
      if (!std::binary_search(coords.begin(), coords.end(), a.coord)) return false;
  return true;
}

// Every vector touches at most one coordinate, so the frame operator is
// diagonal on K with entry sum |w|^2 per coordinate, and the Gram matrix
// splits into one rank-one block per coordinate.
std::optional<ExactSpectra> grouped_spectra(const Materialization& mat) {
  const auto& atoms = *mat.atoms;
  for (const auto& list : atoms)
    if (list.size() > 1) return std::nullopt;

  std::map<std::size_t, double> coord_sum;
  bool any_zero_vector = false;
  bool any_shared_coord = false;
  double min_norm = std::numeric_limits<double>::infinity();
  std::map<std::size_t, std::size_t> owners;
  for (const auto& list : atoms) {
    if (list.empty()) {
      any_zero_vector = true;
      continue;
    }
    const VectorAtom& a = list.front();
    coord_sum[a.coord] += std::norm(a.weight);
    if (++owners[a.coord] > 1) any_shared_coord = true;
    min_norm = std::min(min_norm, std::norm(a.weight));
  }

  ExactSpectra out;
  out.s_eigs.reserve(mat.space_coords.size());
  for (const std::size_t c : mat.space_coords) {
    const auto it = coord_sum.find(c);
    out.s_eigs.push_back(it == coord_sum.end() ? 0.0 : it->second);
  }
  // Two vectors on one coordinate are linearly dependent and a zero vector is
  // degenerate on its own; either way the synthesis map has a kernel.
  out.rf = (any_zero_vector || any_shared_coord) ? 0.0 : min_norm;
  return out;
}

// Nonzero coordinates are pairwise distinct across the family, so distinct
// vectors are orthogonal. Each nonzero vector contributes one eigenvalue
// |v|^2; the rest of K is annihilated. The Gram matrix is diagonal.
std::optional<ExactSpectra> matching_spectra(const Materialization& mat) {
  const auto& atoms = *mat.atoms;
  std::vector<std::size_t> used;
  for (const auto& list : atoms)
    for (const VectorAtom& a : list) used.push_back(a.coord);
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) return std::nullopt;

  ExactSpectra out;
  std::size_t nonzero_vectors = 0;
  double min_norm = std::numeric_limits<double>::infinity();
  for (const auto& list : atoms) {
    double norm2 = 0.0;
    for (const VectorAtom& a : list) norm2 += std::norm(a.weight);
    min_norm = std::min(min_norm, norm2);
    if (!list.empty()) {
      ++nonzero_vectors;
      out.s_eigs.push_back(norm2);
    }
  }
  const std::size_t dim = mat.space_coords.size();
  if (nonzero_vectors > dim) return std::nullopt;
  out.s_eigs.resize(dim, 0.0);
  out.rf = atoms.empty() ? 0.0 : min_norm;
  return out;
}

std::optional<ExactSpectra> exact_spectra(const Materialization& mat) {
  if (!mat.atoms) return std::nullopt;
  if (!coords_cover(mat.space_coords, *mat.atoms)) return std::nullopt;
  if (auto grouped = grouped_spectra(mat)) return grouped;
  return matching_spectra(mat);
}

BoundsEstimate finish_bounds(const std::vector<double>& eigs, double rf, std::size_t level,
                             std::size_t count, std::size_t space_dim, const RankPolicy& policy) {
  BoundsEstimate b;
  b.level = level;
  b.count = count;
  b.space_dim = space_dim;
  double max_eig = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  for (const double e : eigs) {
    max_eig = std::max(max_eig, e);
    min_eig = std::min(min_eig, e);
  }
  if (eigs.empty()) min_eig = 0.0;
  const double cutoff = policy.cutoff(count, space_dim, std::sqrt(max_eig));
  std::size_t rank = 0;
  for (const double e : eigs)
    if (std::sqrt(e) > cutoff) ++rank;
  b.lower = min_eig;
  b.upper = max_eig;
  b.rf_bound = rf;
  b.complete = rank == space_dim;
  b.surjective = rank == count;
  return b;
}

ComplexMatrix compressed_analysis(const Materialization& mat) {
  const auto& coords = mat.space_coords;
  ComplexMatrix c(mat.count(), coords.size());
  for (std::size_t n = 0; n < mat.count(); ++n)
    for (std::size_t j = 0; j < coords.size(); ++j)
      c(n, j) = std::conj(mat.vectors[n][coords[j]]);
  return c;
}

BoundsEstimate dense_bounds(const Materialization& mat, const RankPolicy& policy) {
  const SvdResult dec = svd(compressed_analysis(mat));
  const auto& sv = dec.singular_values;
  const std::size_t n = mat.count();
  const std::size_t k = mat.space_coords.size();
  BoundsEstimate b;
  b.level = mat.level;
  b.count = n;
  b.space_dim = k;
  const double smax = sv.empty() ? 0.0 : sv.front();
  const double cutoff = policy.cutoff(n, k, smax);
  std::size_t rank = 0;
  for (const double s : sv)
    if (s > cutoff) ++rank;
  b.upper = smax * smax;
  b.lower = k <= sv.size() ? sv[k - 1] * sv[k - 1] : 0.0;
  b.rf_bound = n <= sv.size() ? sv[n - 1] * sv[n - 1] : 0.0;
  b.complete = rank == k;
  b.surjective = rank == n;
  return b;
}

// The span-relative lower bound is the smallest singular value above the rank
// cutoff, squared: the gamma of the analysis map.
BoundsEstimate span_from_values(const std::vector<double>& eigs, double rf, std::size_t level,
                                std::size_t count, std::size_t declared_dim,
                                const RankPolicy& policy) {
  double max_eig = 0.0;
  for (const double e : eigs) max_eig = std::max(max_eig, e);
  const double cutoff = policy.cutoff(count, declared_dim, std::sqrt(max_eig));
  std::size_t rank = 0;
  double min_positive = std::numeric_limits<double>::infinity();
  for (const double e : eigs) {
    if (std::sqrt(e) > cutoff) {
      ++rank;
      min_positive = std::min(min_positive, e);
    }
  }
  if (rank == 0)
    throw EmptySpan("family spans nothing at level " + std::to_string(level));
  BoundsEstimate b;
  b.level = level;
  b.count = count;
  b.space_dim = rank;
  b.lower = min_positive;
  b.upper = max_eig;
  b.rf_bound = rf;
  b.complete = true;
  b.surjective = rank == count;
  return b;
}

BoundsEstimate dense_span_bounds(const Materialization& mat, const RankPolicy& policy) {
  const SvdResult dec = svd(compressed_analysis(mat));
  const auto& sv = dec.singular_values;
  const std::size_t n = mat.count();
  const std::size_t k = mat.space_coords.size();
  const double smax = sv.empty() ? 0.0 : sv.front();
  const double cutoff = policy.cutoff(n, k, smax);
  std::size_t rank = 0;
  for (const double s : sv)
    if (s > cutoff) ++rank;
  if (rank == 0)
    throw EmptySpan("family spans nothing at level " + std::to_string(mat.level));
  BoundsEstimate b;
  b.level = mat.level;
  b.count = n;
  b.space_dim = rank;
  b.lower = sv[rank - 1] * sv[rank - 1];
  b.upper = smax * smax;
  b.rf_bound = n <= sv.size() ? sv[n - 1] * sv[n - 1] : 0.0;
  b.complete = true;
  b.surjective = rank == n;
  return b;
}

LadderVerdict run_ladder(const SequenceFamily& family, const TruncationLadder& ladder,
                         const ClassContext& ctx, bool span_relative) {
  LadderVerdict v;
  std::vector<std::pair<std::size_t, double>> lows;
  std::vector<std::pair<std::size_t, double>> ups;
  std::vector<std::pair<std::size_t, double>> rfs;
  v.complete_all = true;
  v.surjective_all = true;
  for (const std::size_t level : ladder.levels()) {
    const Materialization mat = family.materialize(level);
    const BoundsEstimate b =
        span_relative ? span_bounds_at_level(mat, ctx.rank) : bounds_at_level(mat, ctx.rank);
    lows.emplace_back(level, b.lower);
    ups.emplace_back(level, b.upper);
    rfs.emplace_back(level, b.rf_bound);
    v.complete_all = v.complete_all && b.complete;
    v.surjective_all = v.surjective_all && b.surjective;
    v.per_level.push_back(b);
  }
  v.lower_traj = make_trajectory(std::move(lows), ctx.trend);
  v.upper_traj = make_trajectory(std::move(ups), ctx.trend);
  v.rf_traj = make_trajectory(std::move(rfs), ctx.trend);

  const bool lower_bounded =
      v.lower_traj.trend == Trend::Stable || v.lower_traj.trend == Trend::Diverging;
  const bool upper_bounded =
      v.upper_traj.trend == Trend::Stable || v.upper_traj.trend == Trend::Vanishing;
  const bool rf_positive =
      v.rf_traj.trend == Trend::Stable || v.rf_traj.trend == Trend::Diverging;
  v.flags.complete = v.complete_all;
  v.flags.bessel = upper_bounded;
  v.flags.lower_semi_frame = v.complete_all && lower_bounded;
  v.flags.frame = v.flags.lower_semi_frame && upper_bounded;
  v.flags.riesz_fischer = v.surjective_all && rf_positive;
  return v;
}

}  // namespace

BoundsEstimate bounds_at_level(const Materialization& mat, const RankPolicy& policy) {
  if (mat.space_coords.empty())
    throw EmptySpan("declared space is empty at level " + std::to_string(mat.level));
  if (const auto ex = exact_spectra(mat))
    return finish_bounds(ex->s_eigs, ex->rf, mat.level, mat.count(), mat.space_coords.size(),
                         policy);
  return dense_bounds(mat, policy);
}

BoundsEstimate span_bounds_at_level(const Materialization& mat, const RankPolicy& policy) {
  if (mat.space_coords.empty())
    throw EmptySpan("declared space is empty at level " + std::to_string(mat.level));
  if (const auto ex = exact_spectra(mat))
    return span_from_values(ex->s_eigs, ex->rf, mat.level, mat.count(), mat.space_coords.size(),
                            policy);
  return dense_span_bounds(mat, policy);
}

LadderVerdict classify(const SequenceFamily& family, const TruncationLadder& ladder,
                       const ClassContext& ctx) {
  return run_ladder(family, ladder, ctx, false);
}

LadderVerdict classify_as_sequence(const SequenceFamily& family, const TruncationLadder& ladder,
                                   const ClassContext& ctx) {
  return run_ladder(family, ladder, ctx, true);
}

LadderVerdict rf_check(const SequenceFamily& family, const TruncationLadder& ladder,
                       const ClassContext& ctx) {
  return run_ladder(family, ladder, ctx, false);
}

TriBool tri_complete(const LadderVerdict& v) { return to_tri(v.complete_all); }

TriBool tri_bessel(const LadderVerdict& v) {
  if (v.upper_traj.trend == Trend::Inconclusive) return TriBool::Unknown;
  return to_tri(v.flags.bessel);
}

TriBool tri_lower_semi_frame(const LadderVerdict& v) {
  if (!v.complete_all) return TriBool::False;
  if (v.lower_traj.trend == Trend::Inconclusive) return TriBool::Unknown;
  return to_tri(v.flags.lower_semi_frame);
}

TriBool tri_frame(const LadderVerdict& v) {
  return tri_and(tri_lower_semi_frame(v), tri_bessel(v));
}

TriBool tri_riesz_fischer(const LadderVerdict& v) {
  if (!v.surjective_all) return TriBool::False;
  if (v.rf_traj.trend == Trend::Inconclusive) return TriBool::Unknown;
  return to_tri(v.flags.riesz_fischer);
}

}  // namespace semiframe
