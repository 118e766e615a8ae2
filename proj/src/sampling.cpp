#include "ncball/sampling.hpp"

#include <cmath>

namespace ncball {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Complex Sampler::complex_gaussian() {
  std::normal_distribution<double> normal(0.0, 1.0);
  return {normal(rng_), normal(rng_)};
}

Point Sampler::point_in_ball(int n, double rmax) {
  Vec direction(n);
  for (int i = 0; i < n; ++i) direction(i) = complex_gaussian();
  const double len = direction.norm();
  if (len == 0.0) return Point::origin(n);
  return Point(direction * (uniform(0.0, rmax) / len));
}

Vec Sampler::coefficients(int n, double norm) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_gaussian();
  const double len = v.norm();
  if (len == 0.0) {
    Vec unit = Vec::Zero(n);
    unit(0) = Complex(norm, 0.0);
    return unit;
  }
  return v * (norm / len);
}

Mat Sampler::random_unitary(int n) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = complex_gaussian();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex piv = r(j, j);
    if (std::abs(piv) > 0.0) q.col(j) *= piv / std::abs(piv);
  }
  return q;
}

MoebiusMap Sampler::random_moebius(int n, double center_rmax) {
  const Point center = point_in_ball(n, center_rmax);
  return compose(involution_at(center),
                 MoebiusMap::from_unitary(random_unitary(n)));
}

NcPoly Sampler::random_poly(int n, int max_deg, int terms, double coeff_scale) {
  NcPoly p(n);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> letter(1, n);
  for (int t = 0; t < terms; ++t) {
    Word w(static_cast<std::size_t>(deg(rng_)));
    for (auto& l : w) l = letter(rng_);
    p.add_term(w, complex_gaussian() * coeff_scale);
  }
  return p;
}

}  // namespace ncball
