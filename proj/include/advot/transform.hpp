#pragma once

#include "advot/space.hpp"
#include "advot/types.hpp"

namespace advot {

// Smoothed c-transform against the reference measure:
//   out(x) = eps * log( sum_z m(z) * exp((psi(z) - c(x,z))/eps) ).
// Log-domain stabilized per row; +inf cost entries contribute weight 0.
// Rows are computed in parallel; within a row the summation order is fixed
// left-to-right, so the result is bit-identical to the serial evaluation.
GridFunction soft_ctransform(const GridFunction& psi, const Matrix& cost, double eps,
                             const DiscreteSpace& space);

// Exact counterpart: out(x) = max_z { psi(z) - c(x,z) }.
GridFunction hard_ctransform(const GridFunction& psi, const Matrix& cost,
                             const DiscreteSpace& space);

namespace detail {

// One row of the smoothed transform, split so callers can reuse the shift and
// the weight sum. Returns {shift, sum} with
//   out = shift + eps*log(sum),  sum = sum_z w(z)*exp((psi(z)-c_row[z]-shift)/eps),
// where shift = max_z (psi(z) - c_row[z]). Throws when every term underflows
// to zero (impossible for finite psi and a zero-diagonal cost).
struct RowLse {
  double shift;
  double sum;
  double value(double eps) const;
};

RowLse soft_row(const double* c_row, const GridFunction& psi, const GridFunction& weights,
                double eps);

double hard_row(const double* c_row, const GridFunction& psi);

// Index of the first maximizer of psi(z) - c_row[z].
std::size_t argmax_row(const double* c_row, const GridFunction& psi);

}  // namespace detail

}  // namespace advot
