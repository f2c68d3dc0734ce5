#include "semiframe/direct_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>

namespace semiframe {

namespace {

constexpr double kRightAngle = std::numbers::pi_v<double> / 2.0;
constexpr double kAngleTol = 1e-8;

// Orthonormal basis of the analysis range inside the coefficient space C^N.
// When the range is spanned by coordinate directions the positions are kept
// symbolically, which makes angle computation against another such range
// exact; otherwise a dense basis matrix is carried.
struct RangeBasis {
  std::size_t dim = 0;
  std::size_t ambient = 0;                         // N, the number of vectors
  std::optional<std::vector<std::size_t>> delta;   // sorted coordinate positions
  ComplexMatrix basis;                             // N x dim when delta is absent
};

ComplexMatrix compressed_analysis(const Materialization& mat) {
  const auto& coords = mat.space_coords;
  ComplexMatrix c(mat.count(), coords.size());
  for (std::size_t n = 0; n < mat.count(); ++n)
    for (std::size_t j = 0; j < coords.size(); ++j)
      c(n, j) = std::conj(mat.vectors[n][coords[j]]);
  return c;
}

// Distinct nonzero coordinates across the family make distinct vectors
// orthogonal, and every analysis column is then parallel to a coordinate
// direction delta_n of the coefficient space.
std::optional<RangeBasis> delta_range(const Materialization& mat, const RankPolicy& policy) {
  if (!mat.atoms) return std::nullopt;
  std::vector<std::size_t> used;
  for (const auto& list : *mat.atoms)
    for (const VectorAtom& a : list) used.push_back(a.coord);
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) return std::nullopt;

  double sigma_max = 0.0;
  std::vector<double> norms(mat.count(), 0.0);
  for (std::size_t n = 0; n < mat.count(); ++n) {
    for (const VectorAtom& a : (*mat.atoms)[n]) norms[n] += std::norm(a.weight);
    sigma_max = std::max(sigma_max, norms[n]);
  }
  const double cutoff = policy.cutoff(mat.count(), mat.space_coords.size(), std::sqrt(sigma_max));
  RangeBasis out;
  out.ambient = mat.count();
  std::vector<std::size_t> positions;
  for (std::size_t n = 0; n < mat.count(); ++n)
    if (std::sqrt(norms[n]) > cutoff) positions.push_back(n);
  out.dim = positions.size();
  out.delta = std::move(positions);
  return out;
}

// Single-atom vectors sharing coordinates: analysis columns with the same
// coordinate have disjoint row supports per coordinate, so normalizing the
// per-coordinate columns gives an exact orthonormal basis.
std::optional<RangeBasis> grouped_range(const Materialization& mat, const RankPolicy& policy) {
  if (!mat.atoms) return std::nullopt;
  for (const auto& list : *mat.atoms)
    if (list.size() > 1) return std::nullopt;

  std::map<std::size_t, std::vector<std::pair<std::size_t, Complex>>> groups;
  for (std::size_t n = 0; n < mat.count(); ++n) {
    const auto& list = (*mat.atoms)[n];
    if (list.empty()) continue;
    groups[list.front().coord].emplace_back(n, list.front().weight);
  }
  double sigma_max2 = 0.0;
  std::map<std::size_t, double> sums;
  for (const auto& [c, members] : groups) {
    double s = 0.0;
    for (const auto& [n, w] : members) s += std::norm(w);
    sums[c] = s;
    sigma_max2 = std::max(sigma_max2, s);
  }
  const double cutoff = policy.cutoff(mat.count(), mat.space_coords.size(), std::sqrt(sigma_max2));

  RangeBasis out;
  out.ambient = mat.count();
  std::vector<std::size_t> keep;
  for (const auto& [c, s] : sums)
    if (std::sqrt(s) > cutoff) keep.push_back(c);
  out.dim = keep.size();
  out.basis = ComplexMatrix(mat.count(), keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) {
    const double inv = 1.0 / std::sqrt(sums[keep[j]]);
    for (const auto& [n, w] : groups[keep[j]]) out.basis(n, j) = std::conj(w) * inv;
  }
  return out;
}

RangeBasis dense_range(const Materialization& mat, const RankPolicy& policy) {
  const SvdResult dec = svd(compressed_analysis(mat));
  const auto& sv = dec.singular_values;
  const double smax = sv.empty() ? 0.0 : sv.front();
  const double cutoff = policy.cutoff(mat.count(), mat.space_coords.size(), smax);
  std::size_t rank = 0;
  for (const double s : sv)
    if (s > cutoff) ++rank;
  RangeBasis out;
  out.ambient = mat.count();
  out.dim = rank;
  out.basis = ComplexMatrix(mat.count(), rank);
  for (std::size_t r = 0; r < mat.count(); ++r)
    for (std::size_t j = 0; j < rank; ++j) out.basis(r, j) = dec.left_basis(r, j);
  return out;
}

RangeBasis range_basis(const Materialization& mat, const RankPolicy& policy) {
  if (auto d = delta_range(mat, policy)) return *d;
  if (auto g = grouped_range(mat, policy)) return *g;
  return dense_range(mat, policy);
}

ComplexMatrix delta_to_matrix(const RangeBasis& rb) {
  ComplexMatrix m(rb.ambient, rb.dim);
  for (std::size_t j = 0; j < rb.dim; ++j) m((*rb.delta)[j], j) = 1.0;
  return m;
}

std::vector<double> angles_between(const RangeBasis& a, const RangeBasis& b) {
  if (a.dim == 0 || b.dim == 0) return {};
  if (a.delta && b.delta) {
    std::vector<std::size_t> common;
    std::set_intersection(a.delta->begin(), a.delta->end(), b.delta->begin(), b.delta->end(),
                          std::back_inserter(common));
    std::vector<double> angles(common.size(), 0.0);
    angles.resize(std::min(a.dim, b.dim), kRightAngle);
    return angles;
  }
  const ComplexMatrix ua = a.delta ? delta_to_matrix(a) : a.basis;
  const ComplexMatrix ub = b.delta ? delta_to_matrix(b) : b.basis;
  return principal_angles(ua, ub);
}

DisjointnessReport report_at_level(const Materialization& mf, const Materialization& mg,
                                   const RankPolicy& policy) {
  if (mf.count() != mg.count())
    throw ShapeError("families have different sizes at level " + std::to_string(mf.level) +
                     ", their coefficient spaces are not comparable");
  const RangeBasis rf = range_basis(mf, policy);
  const RangeBasis rg = range_basis(mg, policy);

  DisjointnessReport rep;
  rep.level = mf.level;
  rep.angles = angles_between(rf, rg);
  rep.dim_range_f = rf.dim;
  rep.dim_range_g = rg.dim;
  rep.dim_intersection = static_cast<std::size_t>(
      std::count(rep.angles.begin(), rep.angles.end(), 0.0));
  rep.dim_sum = rf.dim + rg.dim - rep.dim_intersection;
  rep.orthogonality_defect = rep.angles.empty() ? 0.0 : std::cos(rep.angles.front());
  rep.disjoint = rep.dim_intersection == 0;
  rep.strongly_disjoint = std::all_of(rep.angles.begin(), rep.angles.end(), [](double t) {
    return t >= kRightAngle - kAngleTol;
  });
  rep.complement = rep.disjoint && rep.dim_sum == mf.count();
  rep.strongly_complementary = rep.strongly_disjoint && rep.complement;
  return rep;
}

}  // namespace

SequenceFamily direct_sum(const SequenceFamily& f, const SequenceFamily& g) {
  return SequenceFamily::direct_sum_of(f, g);
}

std::vector<DisjointnessReport> disjointness(const SequenceFamily& f, const SequenceFamily& g,
                                             const TruncationLadder& ladder,
                                             const ClassContext& ctx) {
  std::vector<DisjointnessReport> reports;
  reports.reserve(ladder.size());
  for (const std::size_t level : ladder.levels())
    reports.push_back(report_at_level(f.materialize(level), g.materialize(level), ctx.rank));
  return reports;
}

std::vector<PropositionCheck> check_direct_sum_props(const SequenceFamily& f,
                                                     const SequenceFamily& g,
                                                     const TruncationLadder& ladder,
                                                     const ClassContext& ctx) {
  const std::string instance = f.label() + " (+) " + g.label();
  const LadderVerdict vf = classify(f, ladder, ctx);
  const LadderVerdict vg = classify(g, ladder, ctx);
  const LadderVerdict vs = classify(direct_sum(f, g), ladder, ctx);
  const auto disj = disjointness(f, g, ladder, ctx);

  bool disjoint_all = true;
  bool strongly_all = true;
  double smallest_angle = kRightAngle;
  for (const auto& rep : disj) {
    disjoint_all = disjoint_all && rep.disjoint;
    strongly_all = strongly_all && rep.strongly_disjoint;
    if (!rep.angles.empty()) smallest_angle = std::min(smallest_angle, rep.angles.front());
  }

  const NamedFlag disjoint_flag{"ranges disjoint at every level", to_tri(disjoint_all)};
  const NamedFlag strong_flag{"ranges strongly disjoint at every level", to_tri(strongly_all)};
  const NamedFlag f_complete{"first component complete", to_tri(vf.complete_all)};
  const NamedFlag g_complete{"second component complete", to_tri(vg.complete_all)};
  const NamedFlag sum_complete{"direct sum complete", to_tri(vs.complete_all)};
  const NamedFlag f_lsf{"first component lower semi-frame", tri_lower_semi_frame(vf)};
  const NamedFlag g_lsf{"second component lower semi-frame", tri_lower_semi_frame(vg)};
  const NamedFlag sum_lsf{"direct sum lower semi-frame", tri_lower_semi_frame(vs)};
  const NamedFlag f_rf{"first component has positive synthesis bound", tri_riesz_fischer(vf)};
  const NamedFlag sum_rf{"direct sum has positive synthesis bound", tri_riesz_fischer(vs)};

  const std::string angle_note =
      "smallest principal angle over the ladder: " + std::to_string(smallest_angle) + " rad";

  std::vector<PropositionCheck> checks;

  {
    PropositionCheck c;
    c.id = "Prop-5.2";
    c.direction = "forward";
    c.instance = instance;
    c.hypotheses = {disjoint_flag, sum_complete};
    c.conclusion = {"both components complete",
                    tri_and(f_complete.value, g_complete.value)};
    c.status = resolve_status(c.hypotheses, c.conclusion);
    c.notes = {angle_note};
    checks.push_back(std::move(c));
  }
  {
    PropositionCheck c;
    c.id = "Prop-5.2";
    c.direction = "reverse";
    c.instance = instance;
    c.hypotheses = {disjoint_flag, f_complete, g_complete};
    c.conclusion = sum_complete;
    c.conclusion.name = "direct sum complete";
    c.status = resolve_status(c.hypotheses, c.conclusion);
    checks.push_back(std::move(c));
  }
  {
    PropositionCheck c;
    c.id = "Prop-5.4";
    c.direction = "";
    c.instance = instance;
    c.hypotheses = {disjoint_flag, f_lsf, g_lsf};
    c.conclusion = sum_lsf;
    c.status = resolve_status(c.hypotheses, c.conclusion);
    checks.push_back(std::move(c));
  }
  {
    PropositionCheck c;
    c.id = "Prop-5.5";
    c.direction = "forward";
    c.instance = instance;
    c.hypotheses = {strong_flag, sum_lsf};
    c.conclusion = {"both components lower semi-frames",
                    tri_and(f_lsf.value, g_lsf.value)};
    c.status = resolve_status(c.hypotheses, c.conclusion);
    c.notes = {angle_note};
    checks.push_back(std::move(c));
  }
  {
    PropositionCheck c;
    c.id = "Prop-5.5";
    c.direction = "reverse";
    c.instance = instance;
    c.hypotheses = {strong_flag, f_lsf, g_lsf};
    c.conclusion = sum_lsf;
    c.status = resolve_status(c.hypotheses, c.conclusion);
    checks.push_back(std::move(c));
  }
  {
    PropositionCheck c;
    c.id = "Prop-5.8";
    c.direction = "";
    c.instance = instance;
    c.hypotheses = {f_rf};
    c.conclusion = sum_rf;
    c.status = resolve_status(c.hypotheses, c.conclusion);
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace semiframe
