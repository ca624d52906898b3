#include "advot/transform.hpp"

#include <cmath>

#include "advot/parallel.hpp"

namespace advot {

namespace detail {

double RowLse::value(double eps) const { return shift + eps * std::log(sum); }

RowLse soft_row(const double* c_row, const GridFunction& psi, const GridFunction& weights,
                double eps) {
  const std::size_t n = psi.size();
  double shift = -kInf;
  for (std::size_t z = 0; z < n; ++z) {
    const double t = psi[z] - c_row[z];
    if (t > shift) shift = t;
  }
  if (shift == -kInf) throw std::runtime_error("soft_row: degenerate kernel row (all weights 0)");
  double sum = 0.0;
  for (std::size_t z = 0; z < n; ++z) {
    const double t = psi[z] - c_row[z];
    sum += weights[z] * std::exp((t - shift) / eps);
  }
  if (sum <= 0.0) throw std::runtime_error("soft_row: kernel row summed to zero");
  return {shift, sum};
}

double hard_row(const double* c_row, const GridFunction& psi) {
  const std::size_t n = psi.size();
  double best = -kInf;
  for (std::size_t z = 0; z < n; ++z) {
    const double t = psi[z] - c_row[z];
    if (t > best) best = t;
  }
  return best;
}

std::size_t argmax_row(const double* c_row, const GridFunction& psi) {
  const std::size_t n = psi.size();
  double best = -kInf;
  std::size_t arg = 0;
  for (std::size_t z = 0; z < n; ++z) {
    const double t = psi[z] - c_row[z];
    if (t > best) {
      best = t;
      arg = z;
    }
  }
  return arg;
}

}  // namespace detail

namespace {

void check_transform_args(const GridFunction& psi, const Matrix& cost,
                          const DiscreteSpace& space) {
  require(psi.size() == space.size(), "psi length does not match the space");
  require(cost.rows() == space.size() && cost.cols() == space.size(),
          "cost dimensions do not match the space");
  for (double v : psi) require(std::isfinite(v), "psi must be finite");
}

}  // namespace

GridFunction soft_ctransform(const GridFunction& psi, const Matrix& cost, double eps,
                             const DiscreteSpace& space) {
  require(eps > 0.0 && std::isfinite(eps), "soft_ctransform requires eps > 0");
  check_transform_args(psi, cost, space);
  const std::size_t n = space.size();
  GridFunction out(n);
  parallel_rows(n, [&](std::size_t x) {
    out[x] = detail::soft_row(cost.row(x), psi, space.m, eps).value(eps);
  });
  return out;
}

GridFunction hard_ctransform(const GridFunction& psi, const Matrix& cost,
                             const DiscreteSpace& space) {
  check_transform_args(psi, cost, space);
  const std::size_t n = space.size();
  GridFunction out(n);
  parallel_rows(n, [&](std::size_t x) { out[x] = detail::hard_row(cost.row(x), psi); });
  return out;
}

}  // namespace advot
