#pragma once

#include "ncball/point.hpp"
#include "ncball/types.hpp"

namespace ncball {

// Automorphism of B_n, stored as an (n+1)x(n+1) complex matrix
//
//     M = [ A  b ]      acting by   z  |->  (A z + b) / (<z,c> + d),
//         [ c* d ]
//
// where c* denotes the conjugated row of c.  A valid map preserves the
// sesquilinear form of signature (1,n): M* J M = alpha J for some alpha > 0,
// with J = diag(I_n, -1).  The constructor rescales to alpha = 1 (which also
// forces |det M| = 1) and multiplies by a unimodular scalar so that the
// (n+1,n+1) entry d is real and positive.  For a form-preserving matrix
// |d|^2 = 1 + ||b||^2 >= 1, so the phase is always well defined and the
// canonical representative is unique; matrices can then be compared
// entrywise with no residual projective ambiguity.
class MoebiusMap {
 public:
  // Validates form preservation to `form_tol` (scaled by the squared entry
  // magnitude, so long hyperbolic products are not rejected for honest
  // rounding) and canonicalizes.  Throws std::domain_error otherwise.
  explicit MoebiusMap(Mat m, double form_tol = kFormTol);

  static MoebiusMap identity(int n);

  // Block-diagonal extension diag(U, 1) of a unitary U, the automorphisms
  // fixing the origin.
  static MoebiusMap from_unitary(const Mat& u);

  int dim() const { return static_cast<int>(mat_.rows()) - 1; }
  const Mat& matrix() const { return mat_; }

  // max |(M* J M - J)_{ij}| of the stored canonical matrix.
  double form_defect() const;

 private:
  Mat mat_;
};

// The involutive automorphism exchanging 0 and a:
//   z |-> (a - P_a z - s_a Q_a z) / (1 - <z,a>),
// with P_a the orthogonal projection onto span(a) (P_0 = 0), Q_a = I - P_a
// and s_a = sqrt(1 - ||a||^2).  Satisfies M_a(0) = a, M_a(a) = 0 and
// M_a o M_a = id.  For a = 0 this degenerates to z |-> -z.
MoebiusMap involution_at(const Point& a);

// Evaluate the fractional-linear action.  Throws if the denominator is
// numerically zero (a non-normalized matrix) or on dimension mismatch.
Point apply(const MoebiusMap& m, const Point& z);

// compose(m1, m2)(z) = m1(m2(z)); matrix product, renormalized.
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

// Inverse through the form: M^{-1} = J M* J for a canonical M.
MoebiusMap inverse(const MoebiusMap& m);

// Pseudohyperbolic metric rho(z,w) = || M_w(z) ||, the Euclidean distance
// from 0 to the image of z under the involution swapping w and 0.
// Symmetric, in [0,1), zero iff z = w.
double pseudo_distance(const Point& z, const Point& w);

// Exact boundary-distance distortion factor of the involution at a:
//
//   1 - ||M_a(z)|| = F(a,z) (1 - ||z||),
//   F(a,z) = (1-||a||^2)(1+||z||) / ((1+||M_a(z)||) |1-<a,z>|^2).
//
// Always 0 < (1-||a||)/(1+||a||) <= F(a,z) <= (1+||a||)/(1-||a||), so the
// Blaschke condition is preserved by any automorphism moving the origin.
double comparability_factor(const Point& a, const Point& z);

// Entrywise max distance between two canonical matrices; the unimodular
// scalar is already fixed by canonicalization, so this is a faithful
// projective comparison.
double map_distance(const MoebiusMap& a, const MoebiusMap& b);

}  // namespace ncball
