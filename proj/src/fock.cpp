#include "ncball/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace ncball {

namespace {

// Dense D x D complex matrices: keep the truncation at desk scale.
constexpr std::size_t kMaxBasisSize = 6000;

void check_letters(const Word& w, int n) {
  for (int letter : w)
    if (letter < 1 || letter > n)
      throw std::out_of_range("word letter out of alphabet range");
}

}  // namespace

TruncatedFockBasis::TruncatedFockBasis(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw std::invalid_argument("TruncatedFockBasis: n >= 1 required");
  if (d < 0) throw std::invalid_argument("TruncatedFockBasis: d >= 0 required");
  offsets_.assign(1, 0);
  std::size_t level = 1;
  for (int k = 0; k <= d; ++k) {
    offsets_.push_back(offsets_.back() + level);
    if (offsets_.back() > kMaxBasisSize)
      throw std::length_error("TruncatedFockBasis: truncation too large");
    level *= static_cast<std::size_t>(n);
  }
}

std::size_t TruncatedFockBasis::index(const Word& w) const {
  if (static_cast<int>(w.size()) > d_)
    throw std::out_of_range("word longer than truncation degree");
  check_letters(w, n_);
  std::size_t i = 0;
  for (int letter : w) i = i * n_ + static_cast<std::size_t>(letter - 1);
  return offsets_[w.size()] + i;
}

Word TruncatedFockBasis::word_at(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("basis index out of range");
  std::size_t k = 0;
  while (offsets_[k + 1] <= i) ++k;
  std::size_t rem = i - offsets_[k];
  Word w(k);
  for (std::size_t pos = k; pos-- > 0;) {
    w[pos] = static_cast<int>(rem % n_) + 1;
    rem /= n_;
  }
  return w;
}

FockOperator::FockOperator(TruncatedFockBasis basis, Mat entries)
    : basis_(std::move(basis)), mat_(std::move(entries)) {
  const auto d = static_cast<Eigen::Index>(basis_.size());
  if (mat_.rows() != d || mat_.cols() != d)
    throw std::invalid_argument("FockOperator: entries do not match basis");
}

NcPoly::NcPoly(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("NcPoly: n >= 1 required");
}

NcPoly NcPoly::constant(int n, Complex c) {
  NcPoly p(n);
  p.add_term({}, c);
  return p;
}

NcPoly NcPoly::generator(int n, int j) {
  if (j < 1 || j > n) throw std::out_of_range("NcPoly::generator: bad index");
  NcPoly p(n);
  p.add_term({j}, Complex(1.0, 0.0));
  return p;
}

int NcPoly::degree() const {
  return coeffs_.empty() ? 0
                         : static_cast<int>(coeffs_.rbegin()->first.size());
}

void NcPoly::add_term(const Word& w, Complex c) {
  check_letters(w, n_);
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    if (c != Complex(0.0, 0.0)) coeffs_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == Complex(0.0, 0.0)) coeffs_.erase(it);
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("NcPoly: alphabet mismatch");
  NcPoly r = *this;
  for (const auto& [w, c] : o.coeffs_) r.add_term(w, c);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + o * Complex(-1.0, 0.0); }

NcPoly NcPoly::operator*(const NcPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("NcPoly: alphabet mismatch");
  NcPoly r(n_);
  for (const auto& [wa, ca] : coeffs_)
    for (const auto& [wb, cb] : o.coeffs_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

NcPoly NcPoly::operator*(Complex s) const {
  NcPoly r(n_);
  if (s == Complex(0.0, 0.0)) return r;
  for (const auto& [w, c] : coeffs_) r.add_term(w, c * s);
  return r;
}

FockOperator creation(int j, const TruncatedFockBasis& basis) {
  if (j < 1 || j > basis.alphabet())
    throw std::out_of_range("creation: generator index out of range");
  const std::size_t dim = basis.size();
  Mat m = Mat::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Word w = basis.word_at(i);
    if (static_cast<int>(w.size()) >= basis.degree()) continue;  // compressed
    w.insert(w.begin(), j);
    m(static_cast<Eigen::Index>(basis.index(w)),
      static_cast<Eigen::Index>(i)) = Complex(1.0, 0.0);
  }
  return {basis, std::move(m)};
}

FockOperator poly_to_operator(const NcPoly& p, const TruncatedFockBasis& basis) {
  if (p.alphabet() != basis.alphabet())
    throw std::invalid_argument("poly_to_operator: alphabet mismatch");
  if (p.degree() > basis.degree())
    throw std::length_error("poly_to_operator: polynomial degree exceeds truncation");
  const std::size_t dim = basis.size();
  Mat m = Mat::Zero(dim, dim);
  // S_w maps a basis word u to wu when |w|+|u| <= d and to 0 otherwise,
  // which is exactly the product of the compressed creation operators.
  for (const auto& [w, c] : p.coeffs()) {
    const int room = basis.degree() - static_cast<int>(w.size());
    for (std::size_t i = 0; i < dim; ++i) {
      Word u = basis.word_at(i);
      if (static_cast<int>(u.size()) > room) continue;
      Word wu = w;
      wu.insert(wu.end(), u.begin(), u.end());
      m(static_cast<Eigen::Index>(basis.index(wu)),
        static_cast<Eigen::Index>(i)) += c;
    }
  }
  return {basis, std::move(m)};
}

double op_norm(const Mat& m) {
  if (m.rows() == 0) return 0.0;
  const Mat gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Mat> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("op_norm: eigensolver failed");
  const double top = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, top));
}

double op_norm(const FockOperator& t) { return op_norm(t.matrix()); }

Complex eval_scalar(const NcPoly& p, const Point& lambda) {
  if (p.alphabet() != lambda.dim())
    throw std::invalid_argument("eval_scalar: dimension mismatch");
  Complex acc(0.0, 0.0);
  for (const auto& [w, c] : p.coeffs()) {
    Complex mono(1.0, 0.0);
    for (int letter : w) mono *= lambda.coords()(letter - 1);
    acc += c * mono;
  }
  return acc;
}

Mat popescu_apply(const NcPoly& p, const std::vector<Mat>& tuple) {
  if (static_cast<int>(tuple.size()) != p.alphabet())
    throw std::invalid_argument("popescu_apply: tuple size mismatch");
  if (tuple.empty()) throw std::invalid_argument("popescu_apply: empty tuple");
  const Eigen::Index k = tuple.front().rows();
  for (const auto& t : tuple)
    if (t.rows() != k || t.cols() != k)
      throw std::invalid_argument("popescu_apply: tuple entries must be square, equal size");
  if (!(row_norm(tuple) < 1.0))
    throw std::domain_error("popescu_apply: tuple is not a strict row contraction");
  Mat acc = Mat::Zero(k, k);
  for (const auto& [w, c] : p.coeffs()) {
    Mat mono = Mat::Identity(k, k);
    for (int letter : w) mono = mono * tuple[static_cast<std::size_t>(letter - 1)];
    acc += c * mono;
  }
  return acc;
}

double row_norm(const std::vector<Mat>& tuple) {
  if (tuple.empty()) return 0.0;
  Mat sum = Mat::Zero(tuple.front().rows(), tuple.front().rows());
  for (const auto& t : tuple) sum += t * t.adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> solver(sum, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("row_norm: eigensolver failed");
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double row_norm(const std::vector<FockOperator>& tuple) {
  std::vector<Mat> mats;
  mats.reserve(tuple.size());
  for (const auto& t : tuple) {
    if (!(t.basis() == tuple.front().basis()))
      throw std::invalid_argument("row_norm: mixed bases");
    mats.push_back(t.matrix());
  }
  return row_norm(mats);
}

double coeff_l2(const NcPoly& p) {
  double sum = 0.0;
  for (const auto& [w, c] : p.coeffs()) sum += std::norm(c);
  return std::sqrt(sum);
}

}  // namespace ncball
