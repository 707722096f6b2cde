#pragma once

#include <cstddef>

#include "adeds/core.hpp"

namespace adeds {

struct RefineResult {
  RealVector position;
  double fitness;
  /// Objective calls spent, including the initial evaluation when the caller did not supply one.
  std::size_t evaluations;
};

/// Bounded quasi-Newton descent from `x` using central finite-difference gradients.
///
/// Projected BFGS: variables pinned at a bound with the gradient pointing outward are
/// frozen, the step is projected back into the box, and an Armijo backtracking search
/// accepts it. The returned point is never worse than `x` and always lies inside
/// `bounds`. At most `budget` objective calls are made; on any non-finite value the
/// best point seen so far is returned.
RefineResult local_refine(const RealVector& x, double fx, const Objective& objective,
                          const Bounds& bounds, std::size_t budget);

/// Same, evaluating `x` first (that call counts against `budget`).
RefineResult local_refine(const RealVector& x, const Objective& objective, const Bounds& bounds,
                          std::size_t budget);

}  // namespace adeds
