#pragma once

#include <optional>
#include <vector>

#include "ncball/ball_function.hpp"
#include "ncball/group.hpp"

namespace ncball {

// Finite Blaschke-type product vanishing on a prescribed set.  With
// Phi = involution at the probe z, each factor is the extremal linear
// witness vanishing at Phi(lambda_j) with value ||Phi(lambda_j)|| at the
// origin; the witness is the ordered product precomposed with Phi.  It
// vanishes on every incorporated point and
//
//   |witness(z)| = prod_j ||Phi(lambda_j)|| = prod_j rho(z, lambda_j) > 0.
struct VanishingProduct {
  MoebiusMap base_map;                // involution at the probe
  std::vector<BallFunction> factors;  // factor j vanishes at base_map(points[j])
  BallFunction witness;               // (prod factors) o base_map
  std::vector<Point> points;          // incorporated set, in factor order
  Point probe;
  double value_at_probe = 0.0;

  Complex evaluate(const Point& z) const { return witness.evaluate(z); }
};

// Factors are ordered by ascending pseudohyperbolic distance of the points
// from the origin (stable), so values are deterministic.  Throws if the
// probe lies in delta (no vanishing witness can separate it).
VanishingProduct vanishing_witness(std::vector<Point> delta, const Point& z);

enum class Membership { In, Out, Undecided };

// Finite-truncation spectral membership.  In: the probe is within in_tol of
// the set.  Out: the vanishing witness stays above the threshold, certifying
// separation.  Undecided: the finite product is positive but too small to
// rule out that an infinite tail kills it.
struct MembershipVerdict {
  Membership status = Membership::Undecided;
  std::optional<VanishingProduct> witness;
  double witness_value = 0.0;
  std::size_t truncation = 0;  // number of points tested
  double threshold = kMembershipOutThreshold;
};
MembershipVerdict spectral_membership(const std::vector<Point>& delta,
                                      const Point& z,
                                      double threshold = kMembershipOutThreshold,
                                      double in_tol = kMembershipInTol);

// Constancy-on-the-orbit certificate.  Invariance defect: how far f is from
// being fixed by every enumerated element under the dual action; constancy
// defect: how far f is from constant on the orbit.  The element list is
// closed under inverses, so f(gamma(0)) = (gamma^-1 . f)(0) makes
// invariance <= tol force constancy <= tol at the finite truncation.
struct ErgodicityReport {
  double invariance_defect = 0.0;
  double constancy_defect = 0.0;
  double tol = 0.0;
  bool implication_holds = true;  // invariance <= tol  =>  constancy <= tol
  std::size_t n_elements = 0;
  std::size_t n_orbit_points = 0;
};
ErgodicityReport ergodicity_certificate(const std::vector<GroupElement>& elements,
                                        const NcPoly& f, double tol);

// Finite surrogate for "the map sends the spectral closure into itself":
// the whole of delta is treated as core, so Pass means every point of delta
// lands within tol of delta again.
CheckResult quotient_automorphism_check(const MoebiusMap& gamma,
                                        const std::vector<Point>& delta,
                                        double tol);

// Unitary change of coordinates aligning span(delta) with the first k
// coordinates; k is the numerical rank of the stacked coordinate vectors.
struct DimensionReduction {
  Mat unitary;  // n x n, rows are the new coordinate functionals
  int rank = 0;
};
DimensionReduction reduce_dimension(const std::vector<Point>& delta,
                                    double rank_tol = 1e-10);

// Finite rigidity check: a map fixing the origin and a spanning set of
// further points (all within fix_tol) must be the identity; the canonical
// matrix is compared entrywise against I at id_tol.
enum class RigidityVerdict { IdentityConfirmed, PremiseFailed, Violated };
RigidityVerdict fixed_point_rigidity(const MoebiusMap& m,
                                     const std::vector<Point>& fixed_points,
                                     double fix_tol,
                                     double id_tol = kIsometryTol);

}  // namespace ncball
