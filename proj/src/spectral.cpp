#include "ncball/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ncball {

VanishingProduct vanishing_witness(std::vector<Point> delta, const Point& z) {
  const int n = z.dim();
  for (const auto& p : delta) {
    if (p.dim() != n)
      throw std::invalid_argument("vanishing_witness: dimension mismatch");
    if (pseudo_distance(z, p) <= 1e-12)
      throw std::domain_error("vanishing_witness: probe lies in the set");
  }
  std::stable_sort(delta.begin(), delta.end(),
                   [](const Point& a, const Point& b) { return a.norm() < b.norm(); });

  VanishingProduct out{involution_at(z),
                       {},
                       BallFunction::one(n),
                       std::move(delta),
                       z,
                       1.0};
  for (const auto& p : out.points) {
    const Point moved = apply(out.base_map, p);
    // Extremal witness vanishing at `moved`, real positive at the origin.
    out.factors.push_back(extremal_distance(Point::origin(n), moved).witness);
    out.value_at_probe *= moved.norm();
  }
  const BallFunction inner =
      out.factors.empty() ? BallFunction::one(n) : BallFunction::product(out.factors);
  out.witness = inner.precompose(out.base_map);
  return out;
}

MembershipVerdict spectral_membership(const std::vector<Point>& delta,
                                      const Point& z, double threshold,
                                      double in_tol) {
  MembershipVerdict verdict;
  verdict.truncation = delta.size();
  verdict.threshold = threshold;

  double dmin = 2.0;
  for (const auto& p : delta) dmin = std::min(dmin, pseudo_distance(z, p));
  if (dmin <= in_tol) {
    verdict.status = Membership::In;
    return verdict;
  }
  verdict.witness = vanishing_witness(delta, z);
  verdict.witness_value = verdict.witness->value_at_probe;
  verdict.status = verdict.witness_value > threshold ? Membership::Out
                                                     : Membership::Undecided;
  return verdict;
}

ErgodicityReport ergodicity_certificate(const std::vector<GroupElement>& elements,
                                        const NcPoly& f, double tol) {
  if (elements.empty())
    throw std::invalid_argument("ergodicity_certificate: no elements");
  const Orbit orbit = orbit_of_origin(elements);
  ErgodicityReport report;
  report.tol = tol;
  report.n_elements = elements.size();
  report.n_orbit_points = orbit.points.size();

  const Complex at_origin = eval_scalar(f, Point::origin(f.alphabet()));
  for (const auto& lambda : orbit.points) {
    const Complex value = eval_scalar(f, lambda);
    report.constancy_defect =
        std::max(report.constancy_defect, std::abs(value - at_origin));
    for (const auto& e : elements)
      report.invariance_defect =
          std::max(report.invariance_defect,
                   std::abs(dual_action_eval(e.map, f, lambda) - value));
  }
  report.implication_holds =
      !(report.invariance_defect <= tol) || report.constancy_defect <= tol;
  return report;
}

CheckResult quotient_automorphism_check(const MoebiusMap& gamma,
                                        const std::vector<Point>& delta,
                                        double tol) {
  if (delta.empty())
    throw std::invalid_argument("quotient_automorphism_check: empty set");
  Orbit surrogate;
  surrogate.dedup_tol = tol;
  for (const auto& p : delta) {
    surrogate.points.push_back(p);
    surrogate.shells.push_back(0);
    surrogate.element_index.push_back(0);
  }
  const double everything = 2.0;  // every point of delta is core
  return stabilizer_check(gamma, surrogate, everything, tol);
}

DimensionReduction reduce_dimension(const std::vector<Point>& delta,
                                    double rank_tol) {
  if (delta.empty())
    throw std::invalid_argument("reduce_dimension: empty set");
  const int n = delta.front().dim();
  Mat stacked(static_cast<Eigen::Index>(delta.size()), n);
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i].dim() != n)
      throw std::invalid_argument("reduce_dimension: dimension mismatch");
    stacked.row(static_cast<Eigen::Index>(i)) = delta[i].coords().transpose();
  }
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > rank_tol) ++rank;

  if (rank == 0) return {Mat::Identity(n, n), 0};

  Mat u = svd.matrixV().adjoint();
  // Fix the row phases so the result is deterministic and axis-aligned sets
  // come out with U = I.
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    Eigen::Index lead;
    u.row(r).cwiseAbs().maxCoeff(&lead);
    const Complex pivot = u(r, lead);
    if (std::abs(pivot) > 0.0) u.row(r) *= std::conj(pivot) / std::abs(pivot);
  }
  return {std::move(u), rank};
}

RigidityVerdict fixed_point_rigidity(const MoebiusMap& m,
                                     const std::vector<Point>& fixed_points,
                                     double fix_tol, double id_tol) {
  const int n = m.dim();
  if (static_cast<int>(fixed_points.size()) < n)
    return RigidityVerdict::PremiseFailed;  // cannot span
  if (apply(m, Point::origin(n)).norm() > fix_tol)
    return RigidityVerdict::PremiseFailed;
  for (const auto& p : fixed_points) {
    if (p.dim() != n)
      throw std::invalid_argument("fixed_point_rigidity: dimension mismatch");
    if (euclidean_distance(apply(m, p), p) > fix_tol)
      return RigidityVerdict::PremiseFailed;
  }
  if (reduce_dimension(fixed_points).rank < n)
    return RigidityVerdict::PremiseFailed;  // fixed set does not span
  const Mat eye = Mat::Identity(n + 1, n + 1);
  const double defect = (m.matrix() - eye).cwiseAbs().maxCoeff();
  return defect <= id_tol ? RigidityVerdict::IdentityConfirmed
                          : RigidityVerdict::Violated;
}

}  // namespace ncball
