#include "advot/losses.hpp"

#include <cmath>

namespace advot {

namespace {

double log1pexp(double x) {
  // log(1 + e^x) without overflow for large |x|.
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

struct Min1D {
  double t;
  double value;
};

// Golden-section search on an adaptively expanded bracket; tolerance 1e-12
// in t. Assumes f convex (possibly with flat faces).
Min1D golden_min(const std::function<double(double)>& f) {
  constexpr double invphi = 0.6180339887498949;
  double lo = -8.0, hi = 8.0;
  for (;;) {
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-12) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - invphi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + invphi * (b - a);
        fd = f(d);
      }
    }
    const double t = 0.5 * (a + b);
    const double width = hi - lo;
    const bool at_lo = t - lo < 0.01 * width;
    const bool at_hi = hi - t < 0.01 * width;
    if ((!at_lo && !at_hi) || width >= 1e7) return {t, f(t)};
    if (at_lo) lo -= 4.0 * width;
    if (at_hi) hi += 4.0 * width;
  }
}

}  // namespace

LossPair LossPair::logistic() {
  LossPair l;
  l.kind = LossKind::logistic;
  l.pos = [](double t) { return log1pexp(-t); };
  l.neg = [](double t) { return log1pexp(t); };
  l.dpos = [](double t) { return -sigmoid(-t); };
  l.dneg = [](double t) { return sigmoid(t); };
  return l;
}

LossPair LossPair::hinge() {
  LossPair l;
  l.kind = LossKind::hinge;
  l.pos = [](double t) { return t < 1.0 ? 1.0 - t : 0.0; };
  l.neg = [](double t) { return t > -1.0 ? 1.0 + t : 0.0; };
  l.dpos = [](double t) { return t < 1.0 ? -1.0 : (t > 1.0 ? 0.0 : -0.5); };
  l.dneg = [](double t) { return t > -1.0 ? 1.0 : (t < -1.0 ? 0.0 : 0.5); };
  return l;
}

LossPair LossPair::custom(std::function<double(double)> pos, std::function<double(double)> neg,
                          std::function<double(double)> dpos,
                          std::function<double(double)> dneg) {
  LossPair l;
  l.kind = LossKind::custom;
  l.pos = std::move(pos);
  l.neg = std::move(neg);
  l.dpos = std::move(dpos);
  l.dneg = std::move(dneg);
  return l;
}

double bayes_risk(double alpha, const LossPair& losses) {
  require(alpha >= 0.0 && alpha <= 1.0, "bayes_risk requires alpha in [0,1]");
  switch (losses.kind) {
    case LossKind::logistic: {
      if (alpha == 0.0 || alpha == 1.0) return 0.0;
      return -alpha * std::log(alpha) - (1.0 - alpha) * std::log(1.0 - alpha);
    }
    case LossKind::hinge:
      return 2.0 * std::min(alpha, 1.0 - alpha);
    case LossKind::custom: {
      auto f = [&](double t) { return alpha * losses.pos(t) + (1.0 - alpha) * losses.neg(t); };
      return golden_min(f).value;
    }
  }
  return 0.0;  // unreachable
}

double weighted_bayes_risk(double a_pos, double a_neg, const LossPair& losses) {
  require(a_pos >= 0.0 && a_neg >= 0.0 && std::isfinite(a_pos) && std::isfinite(a_neg),
          "weighted_bayes_risk requires finite nonnegative weights");
  const double total = a_pos + a_neg;
  if (total == 0.0) return 0.0;
  return total * bayes_risk(a_pos / total, losses);
}

double optimal_score(double a_pos, double a_neg, const LossPair& losses) {
  require(a_pos >= 0.0 && a_neg >= 0.0 && std::isfinite(a_pos) && std::isfinite(a_neg),
          "optimal_score requires finite nonnegative weights");
  if (a_pos == 0.0 || a_neg == 0.0)
    throw std::domain_error("optimal_score: minimum not attained at zero weight");
  switch (losses.kind) {
    case LossKind::logistic:
      return std::log(a_pos) - std::log(a_neg);
    case LossKind::hinge:
      // The minimizing face is {1}, {-1}, or [-1,1]; ties break to 0.
      if (a_pos > a_neg) return 1.0;
      if (a_pos < a_neg) return -1.0;
      return 0.0;
    case LossKind::custom: {
      auto f = [&](double t) { return a_pos * losses.pos(t) + a_neg * losses.neg(t); };
      return golden_min(f).t;
    }
  }
  return 0.0;  // unreachable
}

}  // namespace advot
