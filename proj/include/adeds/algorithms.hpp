#pragma once

// Classic DE/rand/1/bin and the adaptive, neighbour-attraction variant (ADEDS).

#include <cstddef>
#include <string_view>
#include <vector>

#include "adeds/benchmarks.hpp"
#include "adeds/core.hpp"
#include "adeds/local_search.hpp"

namespace adeds {

struct DeParams {
  std::size_t population_size = 50;
  std::size_t max_generations = 50;
  double F = 0.5;
  double CR = 0.9;

  void validate() const;
};

enum class LocalSearchScope {
  /// Refine the generation's best member once per generation.
  generation_best,
  /// Refine the lowest-fitness trial of the generation once; it replaces its parent if better.
  best_trial,
  /// Refine every trial before it is evaluated against its parent.
  every_trial,
};

struct AdedsParams {
  std::size_t population_size = 50;
  std::size_t max_generations = 50;
  double initial_mutation_rate = 0.8;
  double initial_crossover_rate = 0.9;
  std::size_t stagnation_limit = 40;
  /// Absolute tolerance for the stagnation test; 0 means exact equality.
  double stagnation_tolerance = 0.0;
  bool local_search_enabled = true;
  LocalSearchScope local_search_scope = LocalSearchScope::every_trial;
  std::size_t local_search_budget = 100;
  /// Off evaluates the neighbour-attraction trial directly, with no binomial mixing.
  bool crossover_enabled = true;

  void validate() const;
};

enum class Termination { max_generations, stagnation };

std::string_view to_string(Termination t);

struct RunResult {
  RealVector best_position;
  double best_fitness = 0.0;
  FitnessHistory history;
  std::vector<double> diversity_history;
  std::size_t generations_executed = 0;
  std::size_t evaluations_used = 0;
  Termination terminated_by = Termination::max_generations;
  Population final_population;
};

/// F0 * (1 - g / G).
double adaptive_mutation_rate(std::size_t generation, std::size_t max_generations,
                              double initial_mutation_rate);

/// CR0 * (g / G).
double adaptive_crossover_rate(std::size_t generation, std::size_t max_generations,
                               double initial_crossover_rate);

/// x_r1 + F (x_r2 - x_r3) with r1, r2, r3 distinct and different from `target`, projected
/// onto `bounds`.
RealVector de_mutation(const Population& population, std::size_t target, double F,
                       RngStream& rng, const Bounds& bounds);

/// Takes each trial component with probability CR, otherwise the target component.
/// There is no guaranteed trial index: CR = 0 reproduces the target.
RealVector binomial_crossover(const RealVector& target, const RealVector& trial, double CR,
                              RngStream& rng);

/// x_i + F (n1 - x_i) + F (n2 - x_i) for two distinct neighbours drawn from the whole
/// population (n1 may be x_i itself), projected onto `bounds`.
RealVector adeds_trial(const Population& population, std::size_t index, double F,
                       RngStream& rng, const Bounds& bounds);

RunResult run_de(const Objective& objective, const Bounds& bounds, const DeParams& params,
                 RngStream& rng);
RunResult run_de(const BenchmarkFunction& function, const DeParams& params, RngStream& rng);

RunResult run_adeds(const Objective& objective, const Bounds& bounds, const AdedsParams& params,
                    RngStream& rng);
RunResult run_adeds(const BenchmarkFunction& function, const AdedsParams& params,
                    RngStream& rng);

}  // namespace adeds
