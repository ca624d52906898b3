#pragma once

#include <string>

#include "advot/types.hpp"

namespace advot {

// Finite metric space with a strictly positive reference probability measure.
// Immutable after construction; safe to share across threads.
struct DiscreteSpace {
  GridFunction points;  // coordinates in [0,1)
  Matrix metric;        // symmetric, zero diagonal, triangle inequality
  GridFunction m;       // reference weights, > 0, summing to 1 within 1e-12

  std::size_t size() const { return points.size(); }

  // Validates the metric axioms (triangle inequality on all triples for small
  // N, on a deterministic sample otherwise) and the reference measure.
  static DiscreteSpace validated(GridFunction points, Matrix metric, GridFunction m);
};

// Uniform grid k/N on the circle of circumference 1.
// d(j,k) = min(|j-k|, N-|j-k|)/N, computed in index space.
DiscreteSpace build_torus(std::size_t n);

// Nonnegative cost matrices for the two labels, zero on the diagonal.
struct CostPair {
  Matrix pos;  // cost for label +1
  Matrix neg;  // cost for label -1
  std::string label;

  static CostPair symmetric(Matrix c, std::string label = {});
  static CostPair validated(Matrix pos, Matrix neg, std::string label = {});
};

// Entry (j,k) = d(j,k)^r. Requires r > 0.
Matrix power_cost(const DiscreteSpace& space, double r);

// Entry 0 where d <= threshold, `level` otherwise. `level` may be +inf.
Matrix indicator_cost(const DiscreteSpace& space, double threshold, double level);

}  // namespace advot
