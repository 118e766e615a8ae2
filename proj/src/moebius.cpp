#include "ncball/moebius.hpp"

#include <cmath>
#include <stdexcept>

namespace ncball {

namespace {

Mat signature_form(int n) {
  Mat j = Mat::Identity(n + 1, n + 1);
  j(n, n) = Complex(-1.0, 0.0);
  return j;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

MoebiusMap::MoebiusMap(Mat m, double form_tol) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 2)
    throw std::invalid_argument("MoebiusMap: matrix must be square, size >= 2");
  const int n = static_cast<int>(mat_.rows()) - 1;
  const Mat j = signature_form(n);

  // M* J M = alpha J; read alpha off the bottom-right entry.
  Mat gram = mat_.adjoint() * j * mat_;
  const double alpha = -gram(n, n).real();
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("MoebiusMap: matrix does not preserve the signature form");
  mat_ /= std::sqrt(alpha);

  gram = mat_.adjoint() * j * mat_;
  const double scale = std::max(1.0, max_abs(mat_) * max_abs(mat_));
  if (max_abs(gram - j) > form_tol * scale)
    throw std::domain_error("MoebiusMap: signature form not preserved within tolerance");

  const Complex d = mat_(n, n);
  if (std::abs(d) < 0.5)
    throw std::domain_error("MoebiusMap: degenerate (n+1,n+1) entry");
  mat_ *= std::conj(d) / std::abs(d);
  mat_(n, n) = Complex(mat_(n, n).real(), 0.0);
}

MoebiusMap MoebiusMap::identity(int n) {
  return MoebiusMap(Mat::Identity(n + 1, n + 1));
}

MoebiusMap MoebiusMap::from_unitary(const Mat& u) {
  if (u.rows() != u.cols() || u.rows() < 1)
    throw std::invalid_argument("from_unitary: square matrix required");
  const int n = static_cast<int>(u.rows());
  Mat m = Mat::Identity(n + 1, n + 1);
  m.topLeftCorner(n, n) = u;
  return MoebiusMap(std::move(m));
}

double MoebiusMap::form_defect() const {
  const int n = dim();
  const Mat j = signature_form(n);
  return max_abs(mat_.adjoint() * j * mat_ - j);
}

MoebiusMap involution_at(const Point& a) {
  const int n = a.dim();
  const double na = a.norm();
  Mat m(n + 1, n + 1);
  if (na == 0.0) {
    m = Mat::Identity(n + 1, n + 1);
    m.topLeftCorner(n, n) *= Complex(-1.0, 0.0);
    return MoebiusMap(std::move(m));
  }
  const Vec& av = a.coords();
  const double s = std::sqrt(1.0 - na * na);
  const Mat proj = av * av.adjoint() / Complex(na * na, 0.0);
  const Mat block = -(proj + s * (Mat::Identity(n, n) - proj));
  m.topLeftCorner(n, n) = block;
  m.topRightCorner(n, 1) = av;
  m.bottomLeftCorner(1, n) = -av.adjoint();
  m(n, n) = Complex(1.0, 0.0);
  return MoebiusMap(std::move(m));
}

Point apply(const MoebiusMap& m, const Point& z) {
  if (m.dim() != z.dim())
    throw std::invalid_argument("apply: dimension mismatch");
  const int n = z.dim();
  Vec hom(n + 1);
  hom.head(n) = z.coords();
  hom(n) = Complex(1.0, 0.0);
  const Vec image = m.matrix() * hom;
  const Complex den = image(n);
  if (std::abs(den) < 1e-14)
    throw std::runtime_error("apply: vanishing denominator, map not normalized");
  return Point(image.head(n) / den);
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
  if (m1.dim() != m2.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  return MoebiusMap(m1.matrix() * m2.matrix());
}

MoebiusMap inverse(const MoebiusMap& m) {
  const int n = m.dim();
  Mat j = Mat::Identity(n + 1, n + 1);
  j(n, n) = Complex(-1.0, 0.0);
  return MoebiusMap(j * m.matrix().adjoint() * j);
}

double pseudo_distance(const Point& z, const Point& w) {
  if (z.dim() != w.dim())
    throw std::invalid_argument("pseudo_distance: dimension mismatch");
  return apply(involution_at(w), z).norm();
}

double comparability_factor(const Point& a, const Point& z) {
  if (a.dim() != z.dim())
    throw std::invalid_argument("comparability_factor: dimension mismatch");
  const Point image = apply(involution_at(a), z);
  const double na = a.norm();
  const double nz = z.norm();
  const Complex inner = herm(a.coords(), z.coords());
  const double denom =
      (1.0 + image.norm()) * std::norm(Complex(1.0, 0.0) - inner);
  return (1.0 - na * na) * (1.0 + nz) / denom;
}

double map_distance(const MoebiusMap& a, const MoebiusMap& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("map_distance: dimension mismatch");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace ncball
