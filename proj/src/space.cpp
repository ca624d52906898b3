#include "advot/space.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace advot {

namespace {

void check_metric(const Matrix& d, std::size_t n) {
  require(d.rows() == n && d.cols() == n, "metric dimensions do not match point count");
  for (std::size_t j = 0; j < n; ++j) {
    require(d(j, j) == 0.0, "metric diagonal must be exactly zero");
    for (std::size_t k = j + 1; k < n; ++k) {
      require(std::isfinite(d(j, k)) && d(j, k) >= 0.0, "metric entries must be finite and >= 0");
      require(d(j, k) == d(k, j), "metric must be symmetric");
    }
  }
  // Triangle inequality: exhaustive for small N, deterministic sample otherwise.
  auto triple_ok = [&](std::size_t a, std::size_t b, std::size_t c) {
    return d(a, c) <= d(a, b) + d(b, c) + 1e-12;
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          require(triple_ok(a, b, c), "metric violates the triangle inequality");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < 20000; ++s)
      require(triple_ok(pick(rng), pick(rng), pick(rng)),
              "metric violates the triangle inequality");
  }
}

void check_measure(const GridFunction& m, std::size_t n) {
  require(m.size() == n, "reference measure length does not match point count");
  double total = 0.0;
  for (double w : m) {
    require(std::isfinite(w) && w > 0.0, "reference measure must have full support");
    total += w;
  }
  require(std::abs(total - 1.0) <= 1e-12, "reference measure must sum to 1");
}

void check_cost(const Matrix& c, const char* which) {
  require(c.rows() == c.cols(), std::string(which) + " cost must be square");
  for (std::size_t j = 0; j < c.rows(); ++j) {
    require(c(j, j) == 0.0, std::string(which) + " cost diagonal must be exactly zero");
    for (std::size_t k = 0; k < c.cols(); ++k) {
      const double v = c(j, k);
      require(v >= 0.0 && !std::isnan(v), std::string(which) + " cost entries must be >= 0");
    }
  }
}

}  // namespace

DiscreteSpace DiscreteSpace::validated(GridFunction points, Matrix metric, GridFunction m) {
  const std::size_t n = points.size();
  require(n >= 1, "space needs at least one point");
  check_metric(metric, n);
  check_measure(m, n);
  return DiscreteSpace{std::move(points), std::move(metric), std::move(m)};
}

DiscreteSpace build_torus(std::size_t n) {
  require(n >= 2, "torus grid needs at least 2 points");
  DiscreteSpace s;
  s.points.resize(n);
  s.m.assign(n, 1.0 / static_cast<double>(n));
  s.metric = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k)
    s.points[k] = static_cast<double>(k) / static_cast<double>(n);
  // Distances in index space first; the single division avoids wraparound drift.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t gap = j > k ? j - k : k - j;
      const std::size_t arc = gap < n - gap ? gap : n - gap;
      s.metric(j, k) = static_cast<double>(arc) / static_cast<double>(n);
    }
  }
  return s;
}

CostPair CostPair::symmetric(Matrix c, std::string label) {
  check_cost(c, "shared");
  CostPair out;
  out.pos = c;
  out.neg = std::move(c);
  out.label = std::move(label);
  return out;
}

CostPair CostPair::validated(Matrix pos, Matrix neg, std::string label) {
  check_cost(pos, "label +1");
  check_cost(neg, "label -1");
  require(pos.rows() == neg.rows(), "cost matrices must have matching sizes");
  return CostPair{std::move(pos), std::move(neg), std::move(label)};
}

Matrix power_cost(const DiscreteSpace& space, double r) {
  require(r > 0.0 && std::isfinite(r), "power cost requires r > 0");
  const std::size_t n = space.size();
  Matrix c(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      c(j, k) = j == k ? 0.0 : std::pow(space.metric(j, k), r);
  return c;
}

Matrix indicator_cost(const DiscreteSpace& space, double threshold, double level) {
  require(threshold >= 0.0, "indicator cost requires threshold >= 0");
  require(level >= 0.0, "indicator cost requires level >= 0");
  const std::size_t n = space.size();
  Matrix c(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      c(j, k) = space.metric(j, k) <= threshold ? 0.0 : level;
  return c;
}

}  // namespace advot
