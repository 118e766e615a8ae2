#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ncball/moebius.hpp"
#include "ncball/point.hpp"

namespace ncball {

// An analytic function B_n -> closure(B_1) carrying a sup-norm certificate.
// The expression tree is built from four combinators, each of which
// preserves the bound ||f||_inf <= 1:
//
//   linear      z |-> sum_j a_j z_j            with sum |a_j|^2 <= 1
//   precompose  f o m                          m an automorphism of B_n
//   product     f_1 ... f_k                    (empty product = constant 1)
//   scaled      s f                            with |s| <= 1
//
// Values are immutable; nodes are shared, so copies are cheap.
class BallFunction {
 public:
  enum class Kind { Linear, Precompose, Product, Scaled };

  struct Node {
    Kind kind;
    int dim;
    Vec coeffs;                    // Linear
    std::optional<MoebiusMap> map; // Precompose
    std::vector<std::shared_ptr<const Node>> children;
    Complex scalar{1.0, 0.0};      // Scaled
  };

  // sum |a_j|^2 <= 1 (a hair of rounding slack is tolerated, never rescaled).
  static BallFunction linear(Vec coeffs);
  static BallFunction zero(int n);
  static BallFunction one(int n);  // empty product
  static BallFunction product(std::vector<BallFunction> factors);

  BallFunction precompose(const MoebiusMap& m) const;  // this o m
  BallFunction scaled(Complex s) const;

  Complex evaluate(const Point& z) const;
  Complex operator()(const Point& z) const { return evaluate(z); }

  int dim() const { return root_->dim; }
  const Node& root() const { return *root_; }

 private:
  using NodePtr = std::shared_ptr<const Node>;
  explicit BallFunction(NodePtr root) : root_(std::move(root)) {}
  static Complex eval_node(const Node& node, const Point& z);
  NodePtr root_;
};

// The extremal description of the pseudohyperbolic metric:
//
//   rho(z,w) = max{ |f(z)| : ||f||_inf <= 1, f(w) = 0 },
//
// attained by the linear functional with coefficients conj(z'_j)/||z'||,
// z' = M_w(z), precomposed with the involution at w.  The returned value is
// |witness(z)|, which agrees with pseudo_distance(z,w) to the cross-formula
// tolerance; witness(w) = 0.  For z = w the witness degenerates to the zero
// function.
struct ExtremalResult {
  double value;
  BallFunction witness;
};
ExtremalResult extremal_distance(const Point& z, const Point& w);

}  // namespace ncball
