#include "adeds/algorithms.hpp"

#include <cmath>
#include <span>
#include <string>

namespace adeds {

namespace {

void check_schedule_args(std::size_t generation, std::size_t max_generations) {
  if (max_generations == 0) throw InvalidInput("schedule: max_generations must be positive");
  if (generation > max_generations)
    throw InvalidInput("schedule: generation " + std::to_string(generation) +
                       " exceeds max_generations " + std::to_string(max_generations));
}

void check_member(const Population& population, std::size_t index, std::size_t min_size,
                  const char* op) {
  if (population.size() < min_size)
    throw InvalidConfiguration(std::string(op) + ": population needs at least " +
                               std::to_string(min_size) + " members");
  if (index >= population.size())
    throw InvalidInput(std::string(op) + ": member index out of range");
}

/// Wraps the objective and counts calls.
class CountingObjective {
 public:
  explicit CountingObjective(const Objective& f) : f_(f) {
    counted_ = [this](const RealVector& x) {
      ++count_;
      return f_(x);
    };
  }
  CountingObjective(const CountingObjective&) = delete;
  CountingObjective& operator=(const CountingObjective&) = delete;

  double operator()(const RealVector& x) { return counted_(x); }
  const Objective& objective() const { return counted_; }
  std::size_t count() const { return count_; }
  void add(std::size_t n) { count_ += n; }

 private:
  const Objective& f_;
  Objective counted_;
  std::size_t count_ = 0;
};

struct Trace {
  FitnessHistory history;
  std::vector<double> diversity;

  void record(const Population& population) {
    history.push_back(population.best_fitness());
    diversity.push_back(adeds::diversity(population));
  }
};

RunResult finish(Population population, Trace trace, std::size_t generations,
                 std::size_t evaluations, Termination termination) {
  const std::size_t best = population.best_index();
  return RunResult{population.position(best),
                   population.fitness(best),
                   std::move(trace.history),
                   std::move(trace.diversity),
                   generations,
                   evaluations,
                   termination,
                   std::move(population)};
}

}  // namespace

void DeParams::validate() const {
  if (population_size < 4)
    throw InvalidConfiguration("DE: population_size must be at least 4");
  if (max_generations == 0) throw InvalidConfiguration("DE: max_generations must be positive");
  if (!(F > 0.0 && F <= 2.0)) throw InvalidConfiguration("DE: F must lie in (0, 2]");
  if (!(CR >= 0.0 && CR <= 1.0)) throw InvalidConfiguration("DE: CR must lie in [0, 1]");
}

void AdedsParams::validate() const {
  if (population_size < 4)
    throw InvalidConfiguration("ADEDS: population_size must be at least 4");
  if (max_generations == 0) throw InvalidConfiguration("ADEDS: max_generations must be positive");
  if (!(initial_mutation_rate > 0.0 && initial_mutation_rate <= 2.0))
    throw InvalidConfiguration("ADEDS: initial_mutation_rate must lie in (0, 2]");
  if (!(initial_crossover_rate >= 0.0 && initial_crossover_rate <= 1.0))
    throw InvalidConfiguration("ADEDS: initial_crossover_rate must lie in [0, 1]");
  if (stagnation_limit == 0 || stagnation_limit > max_generations)
    throw InvalidConfiguration("ADEDS: stagnation_limit must lie in [1, max_generations]");
  if (!(stagnation_tolerance >= 0.0))
    throw InvalidConfiguration("ADEDS: stagnation_tolerance must be nonnegative");
  if (local_search_enabled && local_search_budget == 0)
    throw InvalidConfiguration("ADEDS: local_search_budget must be positive");
}

std::string_view to_string(Termination t) {
  return t == Termination::stagnation ? "stagnation" : "max_generations";
}

double adaptive_mutation_rate(std::size_t generation, std::size_t max_generations,
                              double initial_mutation_rate) {
  check_schedule_args(generation, max_generations);
  return initial_mutation_rate *
         (1.0 - static_cast<double>(generation) / static_cast<double>(max_generations));
}

double adaptive_crossover_rate(std::size_t generation, std::size_t max_generations,
                               double initial_crossover_rate) {
  check_schedule_args(generation, max_generations);
  return initial_crossover_rate *
         (static_cast<double>(generation) / static_cast<double>(max_generations));
}

RealVector de_mutation(const Population& population, std::size_t target, double F,
                       RngStream& rng, const Bounds& bounds) {
  check_member(population, target, 4, "de_mutation");
  const std::size_t n = population.size();
  std::size_t r1, r2, r3;
  do r1 = rng.index(n); while (r1 == target);
  do r2 = rng.index(n); while (r2 == target || r2 == r1);
  do r3 = rng.index(n); while (r3 == target || r3 == r1 || r3 == r2);
  return clamp_to_bounds(population.position(r1) + F * (population.position(r2) -
                                                         population.position(r3)),
                         bounds);
}

RealVector binomial_crossover(const RealVector& target, const RealVector& trial, double CR,
                              RngStream& rng) {
  if (target.size() != trial.size())
    throw InvalidInput("binomial_crossover: dimension mismatch");
  if (!(CR >= 0.0 && CR <= 1.0)) throw InvalidInput("binomial_crossover: CR must lie in [0, 1]");
  RealVector mixed = target;
  for (Eigen::Index j = 0; j < target.size(); ++j)
    if (rng.uniform() < CR) mixed[j] = trial[j];
  return mixed;
}

RealVector adeds_trial(const Population& population, std::size_t index, double F,
                       RngStream& rng, const Bounds& bounds) {
  check_member(population, index, 3, "adeds_trial");
  const std::size_t n = population.size();
  const std::size_t first = rng.index(n);
  std::size_t second = rng.index(n - 1);
  if (second >= first) ++second;
  const auto x = population.position(index);
  return clamp_to_bounds(
      x + F * (population.position(first) - x) + F * (population.position(second) - x), bounds);
}

RunResult run_de(const Objective& objective, const Bounds& bounds, const DeParams& params,
                 RngStream& rng) {
  params.validate();
  CountingObjective f(objective);
  Population population =
      initialize_population(params.population_size, bounds, rng, f.objective());

  Trace trace;
  trace.record(population);

  const std::size_t n = population.size();
  std::vector<RealVector> trials(n);
  std::vector<double> trial_fitness(n);
  for (std::size_t g = 0; g < params.max_generations; ++g) {
    // Generational scheme: every donor comes from the population as it stood at the start.
    for (std::size_t i = 0; i < n; ++i) {
      const RealVector mutant = de_mutation(population, i, params.F, rng, bounds);
      trials[i] = binomial_crossover(population.position(i), mutant, params.CR, rng);
      trial_fitness[i] = f(trials[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (trial_fitness[i] < population.fitness(i)) population.replace(i, trials[i], trial_fitness[i]);
    population.set_generation(g + 1);
    trace.record(population);
  }

  return finish(std::move(population), std::move(trace), params.max_generations, f.count(),
                Termination::max_generations);
}

RunResult run_de(const BenchmarkFunction& function, const DeParams& params, RngStream& rng) {
  return run_de(function.objective, function.default_bounds, params, rng);
}

RunResult run_adeds(const Objective& objective, const Bounds& bounds, const AdedsParams& params,
                    RngStream& rng) {
  params.validate();
  CountingObjective f(objective);
  Population population =
      initialize_population(params.population_size, bounds, rng, f.objective());

  Trace trace;
  trace.record(population);

  const std::size_t n = population.size();
  const std::size_t G = params.max_generations;
  const bool refine_trials =
      params.local_search_enabled && params.local_search_scope == LocalSearchScope::every_trial;
  const bool refine_best =
      params.local_search_enabled && params.local_search_scope == LocalSearchScope::generation_best;
  const bool refine_best_trial =
      params.local_search_enabled && params.local_search_scope == LocalSearchScope::best_trial;

  std::size_t executed = 0;
  Termination termination = Termination::max_generations;
  for (std::size_t g = 0; g < G; ++g) {
    const double F = adaptive_mutation_rate(g, G, params.initial_mutation_rate);
    const double CR = adaptive_crossover_rate(g, G, params.initial_crossover_rate);

    std::size_t best_trial_index = n;
    RealVector best_trial;
    double best_trial_fitness = 0.0;
    // In-place update: later members already see this generation's replacements.
    for (std::size_t i = 0; i < n; ++i) {
      RealVector trial = adeds_trial(population, i, F, rng, bounds);
      if (params.crossover_enabled)
        trial = binomial_crossover(population.position(i), trial, CR, rng);
      double trial_fitness = f(trial);
      if (refine_trials) {
        RefineResult refined = local_refine(trial, trial_fitness, objective, bounds,
                                            params.local_search_budget);
        f.add(refined.evaluations);
        trial = std::move(refined.position);
        trial_fitness = refined.fitness;
      }
      if (refine_best_trial && (best_trial_index == n || trial_fitness < best_trial_fitness)) {
        best_trial_index = i;
        best_trial = trial;
        best_trial_fitness = trial_fitness;
      }
      if (trial_fitness < population.fitness(i)) population.replace(i, trial, trial_fitness);
    }

    if (refine_best_trial && best_trial_index < n) {
      RefineResult refined = local_refine(best_trial, best_trial_fitness, objective, bounds,
                                          params.local_search_budget);
      f.add(refined.evaluations);
      if (refined.fitness < population.fitness(best_trial_index))
        population.replace(best_trial_index, refined.position, refined.fitness);
    }

    if (refine_best) {
      const std::size_t best = population.best_index();
      RefineResult refined = local_refine(population.position(best), population.fitness(best),
                                          objective, bounds, params.local_search_budget);
      f.add(refined.evaluations);
      if (refined.fitness < population.fitness(best))
        population.replace(best, refined.position, refined.fitness);
    }

    population.set_generation(g + 1);
    trace.record(population);
    executed = g + 1;

    // Stagnation looks at per-generation bests only, not the initial population.
    const std::span<const double> generational(trace.history.data() + 1, executed);
    if (has_converged(generational, params.stagnation_limit, params.stagnation_tolerance)) {
      termination = Termination::stagnation;
      break;
    }
  }

  return finish(std::move(population), std::move(trace), executed, f.count(), termination);
}

RunResult run_adeds(const BenchmarkFunction& function, const AdedsParams& params,
                    RngStream& rng) {
  return run_adeds(function.objective, function.default_bounds, params, rng);
}

}  // namespace adeds
