#include "adeds/core.hpp"

#include <algorithm>
#include <limits>

namespace adeds {

namespace {

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Population::Population(Eigen::MatrixXd positions, Eigen::VectorXd fitness, std::size_t generation)
    : positions_(std::move(positions)), fitness_(std::move(fitness)), generation_(generation) {
  if (positions_.cols() == 0 || positions_.rows() == 0)
    throw InvalidInput("population must be nonempty");
  if (fitness_.size() != positions_.cols())
    throw InvalidInput("population: fitness count does not match member count");
}

void Population::replace(std::size_t i, const RealVector& x, double value) {
  if (i >= size()) throw InvalidInput("population: member index out of range");
  if (x.size() != dimension()) throw InvalidInput("population: dimension mismatch");
  positions_.col(static_cast<Eigen::Index>(i)) = x;
  fitness_[static_cast<Eigen::Index>(i)] = value;
}

std::size_t Population::best_index() const {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < fitness_.size(); ++i)
    if (fitness_[i] < fitness_[best]) best = i;
  return static_cast<std::size_t>(best);
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t run_index) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(~run_index));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t run_index)
    : seed_(seed), run_index_(run_index), engine_(derive_stream_seed(seed, run_index)) {}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double low, double high) {
  return std::clamp(low + (high - low) * uniform(), low, high);
}

std::size_t RngStream::index(std::size_t n) {
  if (n == 0) throw InvalidInput("RngStream::index: empty range");
  const std::uint64_t range = n;
  // Rejection keeps the draw unbiased: accept only below the largest multiple of n.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % range);
}

Population initialize_population(std::size_t size, const Bounds& bounds, RngStream& rng,
                                 const Objective& objective) {
  if (size < 4)
    throw InvalidConfiguration("population size must be at least 4, got " + std::to_string(size));
  const Eigen::Index dim = bounds.dimension();
  Eigen::MatrixXd positions(dim, static_cast<Eigen::Index>(size));
  Eigen::VectorXd fitness(static_cast<Eigen::Index>(size));
  for (Eigen::Index i = 0; i < positions.cols(); ++i) {
    for (Eigen::Index j = 0; j < dim; ++j)
      positions(j, i) = rng.uniform(bounds.low()[j], bounds.high()[j]);
    fitness[i] = objective(positions.col(i));
  }
  return Population(std::move(positions), std::move(fitness), 0);
}

double convergence_rate(std::span<const double> history, std::size_t generation) {
  if (generation < 1 || generation >= history.size())
    throw InvalidInput("convergence_rate: generation " + std::to_string(generation) +
                       " out of range for history of length " + std::to_string(history.size()));
  return history[generation] - history[generation - 1];
}

bool has_converged(std::span<const double> history, std::size_t stagnation_limit,
                   double tolerance) {
  if (stagnation_limit == 0) throw InvalidInput("has_converged: stagnation_limit must be >= 1");
  if (history.size() < stagnation_limit) return false;
  const double last = history.back();
  const auto tail = history.last(stagnation_limit);
  return std::all_of(tail.begin(), tail.end(), [&](double v) {
    return tolerance == 0.0 ? v == last : std::abs(v - last) <= tolerance;
  });
}

}  // namespace adeds
