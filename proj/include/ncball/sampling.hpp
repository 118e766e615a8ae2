#pragma once

#include <cstdint>
#include <random>

#include "ncball/fock.hpp"
#include "ncball/moebius.hpp"
#include "ncball/point.hpp"

namespace ncball {

// Deterministic sample sources for property sweeps.  Everything flows from
// one explicit seed; there is no hidden entropy.  Radii are capped below 1
// (default 0.9) so 1e-12-tier identities stay within double conditioning.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  Complex complex_gaussian();

  // Uniformly distributed direction, radius uniform in [0, rmax].
  Point point_in_ball(int n, double rmax = 0.9);

  // Random coefficient vector with l2 norm exactly `norm`.
  Vec coefficients(int n, double norm = 1.0);

  Mat random_unitary(int n);

  // Cartan form: involution at a random center followed by a random unitary
  // rotation; reaches every automorphism class.
  MoebiusMap random_moebius(int n, double center_rmax = 0.9);

  // Random polynomial with `terms` monomials of degree <= max_deg.
  NcPoly random_poly(int n, int max_deg, int terms, double coeff_scale = 1.0);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ncball
