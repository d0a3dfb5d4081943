#pragma once

// Exact and floating arithmetic on T^d = R^d/Z^d, wraparound metrics, and
// certified epsilon-density.
//
// Certification contract: y -> dist(y, S) is 1-Lipschitz in the chosen metric,
// so evaluating it at the centers of a uniform grid of spacing h brackets the
// covering radius R = max_y dist(y, S):
//
//   max_c d(c)  <=  R  <=  max_c d(c) + rho(h),
//
// with rho(h) = h/2 for sup and (h/2)*sqrt(d) for euclidean (cell
// circumradius). Dimension 1 is computed exactly by sorting and halving the
// largest circular gap; for exact point sets that path decides density
// verdicts in rational arithmetic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "glasner/numeric.hpp"

namespace glasner {

enum class Metric { Sup, Euclidean };

template <typename Scalar>
class TorusPoint {
 public:
  TorusPoint() = default;
  // Coordinates must already lie in [0,1); reduce_to_torus produces them.
  explicit TorusPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("torus point needs at least one coordinate");
    for (const auto& c : coords_)
      if (c < 0 || c >= 1) throw std::invalid_argument("torus coordinate outside [0,1)");
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const Scalar& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

 private:
  std::vector<Scalar> coords_;
};

using ExactTorusPoint = TorusPoint<Rational>;
using FloatTorusPoint = TorusPoint<double>;

ExactTorusPoint reduce_to_torus(const std::vector<Rational>& v);
FloatTorusPoint reduce_to_torus(const std::vector<double>& v);

// Homogeneous set of pairwise-distinct points sharing one dimension. Exact
// points compare exactly; float points by bit equality.
template <typename Scalar>
class PointSet {
 public:
  explicit PointSet(std::vector<TorusPoint<Scalar>> pts) : pts_(std::move(pts)) {
    if (pts_.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : pts_)
      if (p.dim() != pts_[0].dim()) throw std::invalid_argument("mixed dimensions in point set");
    auto sorted = pts_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("point set has duplicate points");
  }

  int64_t size() const { return static_cast<int64_t>(pts_.size()); }
  int dim() const { return pts_[0].dim(); }
  const TorusPoint<Scalar>& operator[](int64_t i) const { return pts_[static_cast<size_t>(i)]; }
  const std::vector<TorusPoint<Scalar>>& points() const { return pts_; }

 private:
  std::vector<TorusPoint<Scalar>> pts_;
};

using ExactPointSet = PointSet<Rational>;
using FloatPointSet = PointSet<double>;

// min(|a-b|, 1-|a-b|) per coordinate; sup takes the max, euclidean the 2-norm.
double torus_distance(const FloatTorusPoint& x, const FloatTorusPoint& y, Metric metric);
double torus_distance(const ExactTorusPoint& x, const ExactTorusPoint& y, Metric metric);

Rational sup_distance_exact(const ExactTorusPoint& x, const ExactTorusPoint& y);
Rational euclidean_sq_exact(const ExactTorusPoint& x, const ExactTorusPoint& y);

struct CoveringRadius {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> witness;  // point attaining lo (grid center / gap midpoint)
};

// Interval containing max_y dist(y, S) with hi - lo <= resolution.
CoveringRadius covering_radius(const ExactPointSet& s, double resolution, Metric metric,
                               int threads = 1);
CoveringRadius covering_radius(const FloatPointSet& s, double resolution, Metric metric,
                               int threads = 1);

enum class Verdict { Dense, NotDense, Unknown };

struct DensityReport {
  Verdict verdict = Verdict::Unknown;
  double covering_radius_lo = 0.0;
  double covering_radius_hi = 0.0;
  std::optional<std::vector<double>> witness;  // uncovered center when NotDense
  double grid_resolution = 0.0;
};

// Three-valued verdict: Dense iff hi <= eps, NotDense iff lo > eps (witness at
// certified distance > eps; checked in rational arithmetic for exact sets),
// otherwise Unknown. Exact one-dimensional sets are decided exactly.
DensityReport is_eps_dense(const ExactPointSet& s, double eps, double resolution, Metric metric,
                           int threads = 1);
DensityReport is_eps_dense(const FloatPointSet& s, double eps, double resolution, Metric metric,
                           int threads = 1);

// Mx mod 1, exact for rational input.
ExactTorusPoint apply_integer_matrix(const BigIntMatrix& M, const ExactTorusPoint& x);
FloatTorusPoint apply_integer_matrix(const BigIntMatrix& M, const FloatTorusPoint& x);

// Image of a whole set; collapses collisions (the image of distinct points
// need not be distinct).
ExactPointSet apply_integer_matrix(const BigIntMatrix& M, const ExactPointSet& s);

}  // namespace glasner
