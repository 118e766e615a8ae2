#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ncball {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Canonical sesquilinear pairing <z,w> = sum_j z_j conj(w_j), linear in the
// first slot.  Eigen's dot() conjugates its *first* argument, hence the swap.
inline Complex herm(const Vec& z, const Vec& w) { return w.dot(z); }

// Tolerance tiers.  Geometric identities hold to 1e-12, agreements between
// two independent formulas to 1e-10, and anything behind a composed solve
// (isometry sweeps, matrix dedup) gets one more decade of slack.
inline constexpr double kFormTol = 1e-12;
inline constexpr double kGeomTol = 1e-12;
inline constexpr double kCrossTol = 1e-10;
inline constexpr double kIsometryTol = 1e-9;
inline constexpr double kDedupTol = 1e-9;
inline constexpr double kMembershipInTol = 1e-10;
inline constexpr double kMembershipOutThreshold = 1e-6;
inline constexpr double kBlaschkeFitMargin = 0.05;

}  // namespace ncball
