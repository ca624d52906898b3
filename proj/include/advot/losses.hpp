#pragma once

#include <functional>

#include "advot/types.hpp"

namespace advot {

enum class LossKind { logistic, hinge, custom };

// Margin losses for the two labels. `pos` (label +1) is convex nonincreasing
// with limit +inf at -inf; `neg` (label -1) is convex nondecreasing with
// limit +inf at +inf. Derivatives use the midpoint subgradient at kinks.
struct LossPair {
  LossKind kind = LossKind::logistic;
  std::function<double(double)> pos, neg;
  std::function<double(double)> dpos, dneg;

  static LossPair logistic();
  static LossPair hinge();
  static LossPair custom(std::function<double(double)> pos, std::function<double(double)> neg,
                         std::function<double(double)> dpos, std::function<double(double)> dneg);
};

// Minimal mixed loss inf_t { alpha*pos(t) + (1-alpha)*neg(t) } for
// alpha in [0,1]. Concave in alpha, zero at the endpoints for losses whose
// infimum is 0. Closed forms for logistic (binary entropy) and hinge
// (2*min(alpha, 1-alpha)); custom losses fall back to 1-D minimization.
double bayes_risk(double alpha, const LossPair& losses);

// Positively homogeneous two-weight extension:
// min_t { a_pos*pos(t) + a_neg*neg(t) } = (a_pos+a_neg)*bayes_risk(share).
// Returns 0 when both weights vanish.
double weighted_bayes_risk(double a_pos, double a_neg, const LossPair& losses);

// The minimizing score t for strictly positive weights. Logistic:
// log(a_pos/a_neg). Hinge is set-valued on flat faces; ties break to the
// minimizer of smallest absolute value. Throws std::domain_error when a
// weight is zero (the infimum is then not attained).
double optimal_score(double a_pos, double a_neg, const LossPair& losses);

}  // namespace advot
