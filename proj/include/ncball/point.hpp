#pragma once

#include <stdexcept>
#include <utility>

#include "ncball/types.hpp"

namespace ncball {

// A point of the open unit ball B_n of C^n.  Construction enforces the
// strict inequality ||z|| < 1; everything downstream may rely on it.
class Point {
 public:
  explicit Point(Vec coords) : coords_(std::move(coords)) {
    if (coords_.size() < 1)
      throw std::invalid_argument("Point: dimension must be >= 1");
    if (!(coords_.norm() < 1.0))
      throw std::domain_error("Point: Euclidean norm must be < 1");
  }

  static Point origin(int n) { return Point(Vec::Zero(n)); }

  int dim() const { return static_cast<int>(coords_.size()); }
  double norm() const { return coords_.norm(); }
  const Vec& coords() const { return coords_; }

 private:
  Vec coords_;
};

inline double euclidean_distance(const Point& a, const Point& b) {
  return (a.coords() - b.coords()).norm();
}

}  // namespace ncball
