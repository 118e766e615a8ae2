#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ncball/point.hpp"
#include "ncball/types.hpp"

namespace ncball {

// A word over the alphabet {1,...,n}; the empty word is the vacuum.
using Word = std::vector<int>;

// Graded ordering: by length, then lexicographic.  Gives every operator a
// stable, reproducible matrix.
struct GradedLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Index bijection between words of length <= d over {1,...,n} and
// 0..D-1 with D = sum_{k=0}^{d} n^k, in graded lexicographic order.
class TruncatedFockBasis {
 public:
  TruncatedFockBasis(int n, int d);

  int alphabet() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return offsets_.back(); }

  std::size_t index(const Word& w) const;
  Word word_at(std::size_t i) const;

  bool operator==(const TruncatedFockBasis& o) const {
    return n_ == o.n_ && d_ == o.d_;
  }

 private:
  int n_, d_;
  std::vector<std::size_t> offsets_;  // offsets_[k] = #words of length < k
};

// Dense operator on the truncated full Fock space.
class FockOperator {
 public:
  FockOperator(TruncatedFockBasis basis, Mat entries);

  const TruncatedFockBasis& basis() const { return basis_; }
  const Mat& matrix() const { return mat_; }
  FockOperator adjoint() const { return {basis_, mat_.adjoint()}; }

 private:
  TruncatedFockBasis basis_;
  Mat mat_;
};

// Noncommutative polynomial sum_w a_w S_w, finitely supported over words.
// Free-standing (no truncation); the degree bound is only checked when the
// polynomial is realized on a basis.
class NcPoly {
 public:
  explicit NcPoly(int n);
  static NcPoly constant(int n, Complex c);
  static NcPoly generator(int n, int j);  // S_j, 1 <= j <= n

  int alphabet() const { return n_; }
  int degree() const;
  bool empty() const { return coeffs_.empty(); }
  const std::map<Word, Complex, GradedLexLess>& coeffs() const {
    return coeffs_;
  }

  void add_term(const Word& w, Complex c);  // accumulates; drops exact zeros

  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;  // free concatenation product
  NcPoly operator*(Complex s) const;

 private:
  int n_;
  std::map<Word, Complex, GradedLexLess> coeffs_;
};

// Left creation operator S_j on the truncation: prepends j to words of
// length < d and compresses top-degree words to 0, so that
// sum_j S_j S_j* = I - P_vacuum holds exactly at every d.
FockOperator creation(int j, const TruncatedFockBasis& basis);

// Realize sum_w a_w S_{w_1}...S_{w_k} on the truncation.  Throws if
// deg(p) > basis degree.
FockOperator poly_to_operator(const NcPoly& p, const TruncatedFockBasis& basis);

// Largest singular value, via a dense self-adjoint eigensolve of T*T.
double op_norm(const Mat& m);
double op_norm(const FockOperator& t);

// Scalar evaluation sum_w a_w lambda^w: the unital multiplicative
// functional sending S_j to lambda_j.
Complex eval_scalar(const NcPoly& p, const Point& lambda);

// Substitute a strict row contraction T = (T_1,...,T_n) of square matrices
// for the generators.  Rejects row_norm(T) >= 1.
Mat popescu_apply(const NcPoly& p, const std::vector<Mat>& tuple);

// Operator norm of the block row [T_1 ... T_n] = sqrt(||sum T_j T_j*||).
double row_norm(const std::vector<Mat>& tuple);
double row_norm(const std::vector<FockOperator>& tuple);

// l2 norm of the coefficient vector; a lower bound for the operator norm of
// the realized polynomial at every truncation degree.
double coeff_l2(const NcPoly& p);

}  // namespace ncball
