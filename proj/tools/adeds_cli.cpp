// Command-line front end: list the catalog, run single-function campaigns, and build
// DE-vs-ADEDS comparison tables.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adeds/error.hpp"
#include "adeds/harness.hpp"
#include "json.hpp"

namespace {

using namespace adeds;

enum ExitCode { kOk = 0, kInvalidConfiguration = 2, kUnknownFunction = 3, kIoFailure = 4 };

struct CampaignFlags {
  std::size_t runs = 10;
  std::size_t pop = 50;
  std::size_t gens = 50;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  double tolerance = 1e-3;
  std::string out;
};

void add_campaign_flags(CLI::App& cmd, CampaignFlags& flags) {
  cmd.add_option("--runs", flags.runs, "Independent runs per (function, algorithm)")
      ->capture_default_str();
  cmd.add_option("--pop", flags.pop, "Population size")->capture_default_str();
  cmd.add_option("--gens", flags.gens, "Maximum generations")->capture_default_str();
  cmd.add_option("--seed", flags.seed, "Root seed; run r uses stream (seed, r)")
      ->capture_default_str();
  cmd.add_option("--workers", flags.workers, "Worker threads (results do not depend on this)")
      ->capture_default_str();
  cmd.add_option("--tolerance", flags.tolerance, "Success tolerance around the known optimum")
      ->capture_default_str();
  cmd.add_option("--out", flags.out, "Output directory")->required();
}

int list_command(const std::string& category, bool as_json) {
  const Registry& registry = Registry::standard();
  std::optional<Category> filter;
  if (!category.empty()) filter = parse_category(category);
  const auto names = registry.list_functions(filter);
  if (as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& name : names) {
      const auto& f = registry.lookup(name);
      out.push_back({{"name", f.name},
                     {"category", std::string(to_string(f.category))},
                     {"dimension", f.dimension},
                     {"known_optimum_value", f.known_optimum_value}});
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  for (const auto& name : names) {
    const auto& f = registry.lookup(name);
    std::printf("%-24s %-18s dim=%-2ld f*=%s\n", f.name.c_str(),
                std::string(to_string(f.category)).c_str(), static_cast<long>(f.dimension),
                format_double(f.known_optimum_value).c_str());
  }
  return kOk;
}

void print_rows(const std::vector<ComparisonRow>& rows) {
  std::printf("%-24s %14s %12s %14s %12s %10s %10s\n", "function", "DE mean", "DE std",
              "ADEDS mean", "ADEDS std", "t", "p");
  for (const auto& r : rows)
    std::printf("%-24s %14.6g %12.4g %14.6g %12.4g %10.4g %10.4g%s\n", r.function.c_str(),
                r.de.mean, r.de.std_dev, r.adeds.mean, r.adeds.std_dev, r.ttest.t_statistic,
                r.ttest.p_value, r.significance.c_str());
}

void write_campaign(const ExperimentSpec& spec, const std::vector<AlgorithmRuns>& results,
                    const std::filesystem::path& dir, std::string_view command) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  write_text_file(dir / "spec.json", spec_json(spec, command));
  write_text_file(dir / "runs.csv", runs_csv(results));
}

int run_command(const std::string& function, const std::string& algo, const CampaignFlags& flags,
                std::optional<double> f0, std::optional<double> cr0,
                std::optional<std::size_t> stagnation, bool no_local_search,
                const std::string& command) {
  ExperimentSpec spec;
  spec.function_names = {Registry::standard().lookup(function).name};
  spec.algorithms = {parse_algorithm(algo)};
  spec.num_runs = flags.runs;
  spec.population_size = flags.pop;
  spec.max_generations = flags.gens;
  spec.root_seed = flags.seed;
  spec.success_tolerance = flags.tolerance;
  spec.stagnation_limit = stagnation;
  if (spec.algorithms.front() == Algorithm::de) {
    if (f0) spec.de.F = *f0;
    if (cr0) spec.de.CR = *cr0;
  } else {
    if (f0) spec.adeds.initial_mutation_rate = *f0;
    if (cr0) spec.adeds.initial_crossover_rate = *cr0;
  }
  if (no_local_search) spec.adeds.local_search_enabled = false;

  const auto results = run_experiment(spec, flags.workers);
  const std::filesystem::path dir(flags.out);
  write_campaign(spec, results, dir, command);
  export_histories(results, dir);

  const auto& f = Registry::standard().lookup(spec.function_names.front());
  std::vector<double> finals;
  for (const auto& r : results.front().runs) finals.push_back(r.best_fitness);
  const SampleSummary s = summarize(finals);
  std::printf("%s %s: mean %.6g std %.4g success %.2f over %zu runs\n", f.name.c_str(),
              algo.c_str(), s.mean, s.std_dev,
              success_rate(results.front().runs, f.known_optimum_value, flags.tolerance), s.n);
  return kOk;
}

int compare_command(const std::string& selector, const CampaignFlags& flags,
                    const std::vector<std::string>& formats, const std::string& command) {
  ExperimentSpec spec;
  spec.function_names = resolve_function_selector(selector);
  spec.num_runs = flags.runs;
  spec.population_size = flags.pop;
  spec.max_generations = flags.gens;
  spec.root_seed = flags.seed;
  spec.success_tolerance = flags.tolerance;

  std::vector<ExportFormat> export_formats;
  for (const auto& name : formats) {
    if (name == "csv") export_formats.push_back(ExportFormat::csv);
    else if (name == "json") export_formats.push_back(ExportFormat::json);
    else throw InvalidConfiguration("unknown export format: " + name);
  }

  const auto results = run_experiment(spec, flags.workers);
  const auto rows = compare_algorithms(results, spec.success_tolerance);
  const std::filesystem::path dir(flags.out);
  write_campaign(spec, results, dir, command);
  export_results(rows, results, export_formats, dir);
  print_rows(rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential evolution and ADEDS benchmark runner"};
  app.require_subcommand(1);

  std::string category;
  bool list_json = false;
  auto* list = app.add_subcommand("list", "Print the benchmark catalog");
  list->add_option("--category", category,
                   "many_local_optima, plate_shaped, valley_shaped, other or demo");
  list->add_flag("--json", list_json, "Emit JSON");

  std::string function, algo = "adeds";
  CampaignFlags run_flags;
  std::optional<double> f0, cr0;
  std::optional<std::size_t> stagnation;
  bool no_local_search = false;
  auto* run = app.add_subcommand("run", "Run one algorithm on one function");
  run->add_option("--function", function, "Benchmark name")->required();
  run->add_option("--algo", algo, "de or adeds")->capture_default_str();
  add_campaign_flags(*run, run_flags);
  run->add_option("--f", f0, "F (de) or initial mutation rate (adeds)");
  run->add_option("--cr", cr0, "CR (de) or final crossover rate (adeds)");
  run->add_option("--stagnation", stagnation, "ADEDS stagnation limit in generations");
  run->add_flag("--no-local-search", no_local_search, "Disable the ADEDS local refinement");

  std::string selector = "all";
  CampaignFlags compare_flags;
  std::vector<std::string> formats{"csv", "json"};
  auto* compare = app.add_subcommand("compare", "Compare DE and ADEDS over several functions");
  compare->add_option("--functions", selector, "all, a category, or comma-separated names")
      ->capture_default_str();
  add_campaign_flags(*compare, compare_flags);
  compare->add_option("--format", formats, "csv and/or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidConfiguration;
  }

  try {
    if (*list) return list_command(category, list_json);
    if (*run)
      return run_command(function, algo, run_flags, f0, cr0, stagnation, no_local_search, "run");
    return compare_command(selector, compare_flags, formats, "compare");
  } catch (const UnknownFunction& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknownFunction;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidConfiguration;
  }
}
