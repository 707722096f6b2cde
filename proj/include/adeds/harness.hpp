#pragma once

// Seeded multi-run campaigns, DE-vs-ADEDS comparison tables and file export.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adeds/algorithms.hpp"
#include "adeds/benchmarks.hpp"
#include "adeds/stats.hpp"

namespace adeds {

enum class Algorithm { de, adeds };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);

struct ExperimentSpec {
  std::vector<std::string> function_names;
  std::vector<Algorithm> algorithms{Algorithm::de, Algorithm::adeds};
  std::size_t num_runs = 10;
  std::size_t population_size = 50;
  std::size_t max_generations = 50;
  std::uint64_t root_seed = 0;
  /// F and CR of the baseline; size fields are taken from the spec.
  DeParams de;
  /// Rates and local-search settings; size fields are taken from the spec.
  AdedsParams adeds;
  /// Unset means min(AdedsParams{}.stagnation_limit, max_generations).
  std::optional<std::size_t> stagnation_limit;
  double success_tolerance = 1e-3;

  DeParams resolved_de() const;
  AdedsParams resolved_adeds() const;
};

/// Expands "all", a category name, or a comma-separated list of function names into
/// canonical registry names. Throws UnknownFunction / InvalidInput.
std::vector<std::string> resolve_function_selector(std::string_view selector,
                                                   const Registry& registry = Registry::standard());

struct AlgorithmRuns {
  std::string function;
  Algorithm algorithm;
  /// runs[r] was driven by RngStream(root_seed, r).
  std::vector<RunResult> runs;
};

/// Every (function, algorithm) pair run `num_runs` times, ordered by function then
/// algorithm as listed in the spec. Validation happens before any run starts. Results do
/// not depend on `workers`.
std::vector<AlgorithmRuns> run_experiment(const ExperimentSpec& spec, std::size_t workers = 1,
                                          const Registry& registry = Registry::standard());

struct ComparisonRow {
  std::string function;
  SampleSummary de;
  SampleSummary adeds;
  double de_success_rate;
  double adeds_success_rate;
  /// welch_t_test(ADEDS finals, DE finals): negative t means ADEDS found lower values.
  /// NaN when either side has fewer than two runs.
  TTestResult ttest;
  std::string significance;

  bool operator==(const ComparisonRow&) const;
};

std::vector<ComparisonRow> compare_algorithms(const std::vector<AlgorithmRuns>& results,
                                              double tolerance = 1e-3,
                                              const Registry& registry = Registry::standard());

enum class ExportFormat { csv, json };

/// `%.17g`; non-finite values as inf / -inf / nan.
std::string format_double(double value);

std::string comparison_csv(const std::vector<ComparisonRow>& rows);
std::string comparison_json(const std::vector<ComparisonRow>& rows);
std::vector<ComparisonRow> parse_comparison_json(std::string_view text);

/// generation,best_fitness,diversity,convergence_rate; one line per generation from 0.
std::string history_csv(const RunResult& run);

/// One line per run: function,algo,run,best_fitness,generations_executed,evaluations_used,
/// terminated_by,best_position (components joined by ';').
std::string runs_csv(const std::vector<AlgorithmRuns>& results);

/// Resolved configuration snapshot. `command` names the subcommand; worker count and output
/// path are deliberately absent so the snapshot is identical across executions.
std::string spec_json(const ExperimentSpec& spec, std::string_view command);

/// Writes comparison.<fmt> for each requested format plus
/// history_<function>_<algo>_<run>.csv for every run. Throws IoError naming the path.
void export_results(const std::vector<ComparisonRow>& rows,
                    const std::vector<AlgorithmRuns>& results,
                    const std::vector<ExportFormat>& formats, const std::filesystem::path& dir);

void export_histories(const std::vector<AlgorithmRuns>& results, const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace adeds
