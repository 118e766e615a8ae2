#include "ncball/ball_function.hpp"

#include <cmath>
#include <stdexcept>

namespace ncball {

namespace {
constexpr double kCertificateSlack = 1e-9;
}

BallFunction BallFunction::linear(Vec coeffs) {
  if (coeffs.size() < 1)
    throw std::invalid_argument("BallFunction::linear: empty coefficients");
  if (coeffs.norm() > 1.0 + kCertificateSlack)
    throw std::domain_error(
        "BallFunction::linear: coefficient l2 norm exceeds 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Linear;
  node->dim = static_cast<int>(coeffs.size());
  node->coeffs = std::move(coeffs);
  return BallFunction(std::move(node));
}

BallFunction BallFunction::zero(int n) { return linear(Vec::Zero(n)); }

BallFunction BallFunction::one(int n) {
  if (n < 1) throw std::invalid_argument("BallFunction::one: dimension >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->dim = n;
  return BallFunction(std::move(node));
}

BallFunction BallFunction::product(std::vector<BallFunction> factors) {
  if (factors.empty())
    throw std::invalid_argument(
        "BallFunction::product: use one(n) for the empty product");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->dim = factors.front().dim();
  for (const auto& f : factors) {
    if (f.dim() != node->dim)
      throw std::invalid_argument("BallFunction::product: dimension mismatch");
    node->children.push_back(f.root_);
  }
  return BallFunction(std::move(node));
}

BallFunction BallFunction::precompose(const MoebiusMap& m) const {
  if (m.dim() != dim())
    throw std::invalid_argument("BallFunction::precompose: dimension mismatch");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Precompose;
  node->dim = dim();
  node->map = m;
  node->children.push_back(root_);
  return BallFunction(std::move(node));
}

BallFunction BallFunction::scaled(Complex s) const {
  if (std::abs(s) > 1.0 + kCertificateSlack)
    throw std::domain_error("BallFunction::scaled: |scalar| exceeds 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Scaled;
  node->dim = dim();
  node->scalar = s;
  node->children.push_back(root_);
  return BallFunction(std::move(node));
}

Complex BallFunction::eval_node(const Node& node, const Point& z) {
  switch (node.kind) {
    case Kind::Linear:
      return node.coeffs.cwiseProduct(z.coords()).sum();
    case Kind::Precompose:
      return eval_node(*node.children.front(), apply(*node.map, z));
    case Kind::Product: {
      Complex acc(1.0, 0.0);
      for (const auto& child : node.children) acc *= eval_node(*child, z);
      return acc;
    }
    case Kind::Scaled:
      return node.scalar * eval_node(*node.children.front(), z);
  }
  throw std::logic_error("BallFunction: unknown node kind");
}

Complex BallFunction::evaluate(const Point& z) const {
  if (z.dim() != dim())
    throw std::invalid_argument("BallFunction::evaluate: dimension mismatch");
  return eval_node(*root_, z);
}

ExtremalResult extremal_distance(const Point& z, const Point& w) {
  if (z.dim() != w.dim())
    throw std::invalid_argument("extremal_distance: dimension mismatch");
  const int n = z.dim();
  const MoebiusMap swap_w = involution_at(w);
  const Vec zprime = apply(swap_w, z).coords();
  const double r = zprime.norm();
  if (r == 0.0) return {0.0, BallFunction::zero(n)};
  const BallFunction witness =
      BallFunction::linear(zprime.conjugate() / r).precompose(swap_w);
  return {std::abs(witness.evaluate(z)), witness};
}

}  // namespace ncball
