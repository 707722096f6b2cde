#include "adeds/local_search.hpp"

#include <algorithm>
#include <cmath>

namespace adeds {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kGradientTolerance = 1e-12;
constexpr int kMaxBacktracks = 40;
constexpr double kPolishStep = 1e-3;
constexpr double kStallStep = 1e-8;

class BudgetedObjective {
 public:
  BudgetedObjective(const Objective& f, std::size_t budget) : f_(f), budget_(budget) {}

  bool can_spend(std::size_t n) const { return used_ + n <= budget_; }
  std::size_t used() const { return used_; }

  double operator()(const RealVector& x) {
    ++used_;
    return f_(x);
  }

 private:
  const Objective& f_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

// Central differences, shrunk to one side where a bound cuts the stencil.
bool fd_gradient(BudgetedObjective& f, const RealVector& x, const Bounds& bounds,
                 RealVector& gradient) {
  const Eigen::Index n = x.size();
  if (!f.can_spend(static_cast<std::size_t>(2 * n))) return false;
  gradient.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[j]));
    RealVector forward = x, backward = x;
    forward[j] = std::min(x[j] + h, bounds.high()[j]);
    backward[j] = std::max(x[j] - h, bounds.low()[j]);
    const double span = forward[j] - backward[j];
    const double ff = f(forward), fb = f(backward);
    if (!(span > 0.0) || !std::isfinite(ff) || !std::isfinite(fb)) return false;
    gradient[j] = (ff - fb) / span;
  }
  return gradient.allFinite();
}

// Compass search: probe +/- step along each axis, halve the step after a sweep
// without improvement. Resolves kinks narrower than the finite-difference stencil.
void compass_polish(BudgetedObjective& f, const Bounds& bounds, double initial_step,
                    RealVector& x, double& fx) {
  const Eigen::Index n = x.size();
  RealVector step(n);
  for (Eigen::Index j = 0; j < n; ++j) step[j] = initial_step * std::max(1.0, std::abs(x[j]));
  while (f.can_spend(1)) {
    bool improved = false;
    for (Eigen::Index j = 0; j < n && f.can_spend(1); ++j) {
      for (double sign : {1.0, -1.0}) {
        if (!f.can_spend(1)) break;
        RealVector probe = x;
        probe[j] = std::clamp(x[j] + sign * step[j], bounds.low()[j], bounds.high()[j]);
        if (probe[j] == x[j]) continue;
        const double fp = f(probe);
        if (std::isfinite(fp) && fp < fx) {
          x = std::move(probe);
          fx = fp;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      step *= 0.5;
      if ((step.array() <= 1e-15 * x.array().abs().max(1.0)).all()) break;
    }
  }
}

}  // namespace

RefineResult local_refine(const RealVector& x0, double fx0, const Objective& objective,
                          const Bounds& bounds, std::size_t budget) {
  RefineResult result{x0, fx0, 0};
  if (!bounds.contains(x0) || !std::isfinite(fx0)) return result;

  BudgetedObjective f(objective, budget);
  const Eigen::Index n = x0.size();
  RealVector x = x0;
  double fx = fx0;
  RealVector g;
  if (!fd_gradient(f, x, bounds, g)) {
    result.evaluations = f.used();
    return result;
  }

  Eigen::MatrixXd inverse_hessian = Eigen::MatrixXd::Identity(n, n);
  bool scaled = false;

  while (true) {
    // Freeze coordinates held at a bound by an outward-pointing gradient.
    RealVector projected = g;
    for (Eigen::Index j = 0; j < n; ++j) {
      const bool at_low = x[j] <= bounds.low()[j] && g[j] > 0.0;
      const bool at_high = x[j] >= bounds.high()[j] && g[j] < 0.0;
      if (at_low || at_high) projected[j] = 0.0;
    }
    if (projected.lpNorm<Eigen::Infinity>() <= kGradientTolerance) break;

    RealVector direction = -(inverse_hessian * projected);
    for (Eigen::Index j = 0; j < n; ++j)
      if (projected[j] == 0.0) direction[j] = 0.0;
    if (!(projected.dot(direction) < 0.0)) {
      inverse_hessian.setIdentity();
      scaled = false;
      direction = -projected;
    }

    double step = 1.0;
    bool accepted = false;
    RealVector candidate;
    double f_candidate = fx;
    for (int k = 0; k < kMaxBacktracks && f.can_spend(1); ++k, step *= 0.5) {
      candidate = clamp_to_bounds(x + step * direction, bounds);
      if (candidate == x) break;
      f_candidate = f(candidate);
      if (std::isfinite(f_candidate) &&
          f_candidate <= fx + kArmijo * projected.dot(candidate - x) && f_candidate < fx) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;

    const RealVector s = candidate - x;
    x = candidate;
    fx = f_candidate;
    // Vanishing steps mean the gradient model no longer describes the function at
    // this scale (typically a kink); leave the rest of the budget to the polish.
    if (s.lpNorm<Eigen::Infinity>() <= kStallStep * std::max(1.0, x.lpNorm<Eigen::Infinity>()))
      break;

    RealVector g_next;
    if (!fd_gradient(f, x, bounds, g_next)) break;
    const RealVector y = g_next - g;
    g = std::move(g_next);

    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      if (!scaled) {
        inverse_hessian *= sy / y.squaredNorm();
        scaled = true;
      }
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
      inverse_hessian = (identity - rho * s * y.transpose()) * inverse_hessian *
                            (identity - rho * y * s.transpose()) +
                        rho * s * s.transpose();
    }
  }

  compass_polish(f, bounds, kPolishStep, x, fx);

  if (fx < result.fitness) {
    result.position = x;
    result.fitness = fx;
  }
  result.evaluations = f.used();
  return result;
}

RefineResult local_refine(const RealVector& x, const Objective& objective, const Bounds& bounds,
                          std::size_t budget) {
  if (budget == 0) throw InvalidInput("local_refine: budget must be positive");
  const double fx = objective(x);
  RefineResult r = local_refine(x, fx, objective, bounds, budget - 1);
  r.evaluations += 1;
  return r;
}

}  // namespace adeds
