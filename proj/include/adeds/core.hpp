#pragma once

// Search-space primitives shared by every optimizer: vectors, box bounds,
// the population container, seeded random streams and run instrumentation.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adeds/error.hpp"

namespace adeds {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RealVector = Vector<double>;

/// Objective to be minimized. Must be a pure function of its argument.
using Objective = std::function<double(const RealVector&)>;

/// Best fitness per generation; index 0 is the initial population.
using FitnessHistory = std::vector<double>;

/// Axis-aligned box [low, high] with low < high in every dimension.
template <typename Scalar>
class BoxBounds {
 public:
  using VectorType = Vector<Scalar>;

  BoxBounds(VectorType low, VectorType high) : low_(std::move(low)), high_(std::move(high)) {
    if (low_.size() == 0) throw InvalidBounds("bounds must have at least one dimension");
    if (low_.size() != high_.size()) throw InvalidBounds("bounds: low/high length mismatch");
    for (Eigen::Index j = 0; j < low_.size(); ++j) {
      if (!std::isfinite(low_[j]) || !std::isfinite(high_[j]))
        throw InvalidBounds("bounds: non-finite limit in dimension " + std::to_string(j));
      if (!(low_[j] < high_[j]))
        throw InvalidBounds("bounds: low >= high in dimension " + std::to_string(j));
    }
  }

  BoxBounds(std::initializer_list<std::pair<Scalar, Scalar>> per_dimension)
      : BoxBounds(unpack(per_dimension, 0), unpack(per_dimension, 1)) {}

  /// The same interval replicated over `dimension` axes.
  static BoxBounds uniform(Eigen::Index dimension, Scalar low, Scalar high) {
    if (dimension <= 0) throw InvalidBounds("bounds must have at least one dimension");
    return BoxBounds(VectorType::Constant(dimension, low), VectorType::Constant(dimension, high));
  }

  const VectorType& low() const noexcept { return low_; }
  const VectorType& high() const noexcept { return high_; }
  Eigen::Index dimension() const noexcept { return low_.size(); }
  VectorType width() const { return high_ - low_; }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& x) const {
    return x.size() == dimension() && (x.array() >= low_.array()).all() &&
           (x.array() <= high_.array()).all();
  }

 private:
  static VectorType unpack(std::initializer_list<std::pair<Scalar, Scalar>> pairs, int which) {
    VectorType v(static_cast<Eigen::Index>(pairs.size()));
    Eigen::Index j = 0;
    for (const auto& p : pairs) v[j++] = which == 0 ? p.first : p.second;
    return v;
  }

  VectorType low_;
  VectorType high_;
};

using Bounds = BoxBounds<double>;

struct Individual {
  RealVector position;
  double fitness;
};

/// Candidate solutions stored column-wise with their cached objective values.
class Population {
 public:
  Population(Eigen::MatrixXd positions, Eigen::VectorXd fitness, std::size_t generation = 0);

  std::size_t size() const noexcept { return static_cast<std::size_t>(positions_.cols()); }
  Eigen::Index dimension() const noexcept { return positions_.rows(); }
  std::size_t generation() const noexcept { return generation_; }
  void set_generation(std::size_t g) noexcept { generation_ = g; }

  /// Members as columns of a dimension x size matrix.
  const Eigen::MatrixXd& positions() const noexcept { return positions_; }
  const Eigen::VectorXd& fitness() const noexcept { return fitness_; }

  auto position(std::size_t i) const { return positions_.col(static_cast<Eigen::Index>(i)); }
  double fitness(std::size_t i) const { return fitness_[static_cast<Eigen::Index>(i)]; }
  Individual member(std::size_t i) const { return {position(i), fitness(i)}; }

  /// Overwrites member `i`. Caller guarantees `value == objective(x)`.
  void replace(std::size_t i, const RealVector& x, double value);

  /// Lowest fitness; ties resolve to the lowest index.
  std::size_t best_index() const;
  double best_fitness() const { return fitness(best_index()); }

 private:
  Eigen::MatrixXd positions_;
  Eigen::VectorXd fitness_;
  std::size_t generation_;
};

/// Seed for stream `run_index` of root seed `seed` (splitmix64 finalizer over both).
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t run_index) noexcept;

/// Deterministic random source. The draw sequence depends only on (seed, run_index):
/// mt19937_64 output is fixed by the standard and the conversions below avoid the
/// implementation-defined std distributions.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t run_index = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t run_index() const noexcept { return run_index_; }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [low, high].
  double uniform(double low, double high);
  /// Uniform integer in [0, n), unbiased. n must be positive.
  std::size_t index(std::size_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t run_index_;
  std::mt19937_64 engine_;
};

/// `size` members drawn uniformly inside `bounds`; one objective call each.
Population initialize_population(std::size_t size, const Bounds& bounds, RngStream& rng,
                                 const Objective& objective);

/// Mean pairwise Euclidean distance between the columns of `points`.
template <typename Derived>
typename Derived::Scalar diversity(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = points.cols();
  if (n == 0) throw InvalidInput("diversity: empty population");
  if (n == 1) return Scalar(0);
  Scalar total(0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) total += (points.col(i) - points.col(j)).norm();
  const Scalar pairs = Scalar(n) * Scalar(n - 1) / Scalar(2);
  return total / pairs;
}

inline double diversity(const Population& population) {
  return diversity(population.positions());
}

/// history[generation] - history[generation - 1].
double convergence_rate(std::span<const double> history, std::size_t generation);

/// True when the last `stagnation_limit` entries all lie within `tolerance` of the final one.
bool has_converged(std::span<const double> history, std::size_t stagnation_limit,
                   double tolerance = 0.0);

/// Componentwise projection onto the box.
template <typename Derived, typename Scalar = typename Derived::Scalar>
Vector<Scalar> clamp_to_bounds(const Eigen::MatrixBase<Derived>& x,
                               const BoxBounds<Scalar>& bounds) {
  if (x.size() != bounds.dimension())
    throw InvalidInput("clamp_to_bounds: dimension mismatch (" + std::to_string(x.size()) +
                       " vs " + std::to_string(bounds.dimension()) + ")");
  return x.derived().cwiseMax(bounds.low()).cwiseMin(bounds.high());
}

}  // namespace adeds
