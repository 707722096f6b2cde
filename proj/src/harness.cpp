#include "adeds/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace adeds {

using nlohmann::json;

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::de ? "de" : "adeds";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "de") return Algorithm::de;
  if (text == "adeds") return Algorithm::adeds;
  throw InvalidConfiguration("unknown algorithm: " + std::string(text));
}

DeParams ExperimentSpec::resolved_de() const {
  DeParams p = de;
  p.population_size = population_size;
  p.max_generations = max_generations;
  return p;
}

AdedsParams ExperimentSpec::resolved_adeds() const {
  AdedsParams p = adeds;
  p.population_size = population_size;
  p.max_generations = max_generations;
  p.stagnation_limit =
      stagnation_limit.value_or(std::min(AdedsParams{}.stagnation_limit, max_generations));
  return p;
}

std::vector<std::string> resolve_function_selector(std::string_view selector,
                                                   const Registry& registry) {
  if (selector == "all") return registry.list_functions();
  for (auto c : {Category::many_local_optima, Category::plate_shaped, Category::valley_shaped,
                 Category::other, Category::demo})
    if (selector == to_string(c)) return registry.list_functions(c);

  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= selector.size()) {
    const std::size_t comma = std::min(selector.find(',', start), selector.size());
    const std::string_view token = selector.substr(start, comma - start);
    if (token.empty()) throw InvalidInput("empty function name in selector");
    const std::string canonical = registry.lookup(token).name;
    if (std::find(names.begin(), names.end(), canonical) == names.end())
      names.push_back(canonical);
    start = comma + 1;
  }
  return names;
}

std::vector<AlgorithmRuns> run_experiment(const ExperimentSpec& spec, std::size_t workers,
                                          const Registry& registry) {
  if (spec.function_names.empty()) throw InvalidConfiguration("experiment: no functions");
  if (spec.algorithms.empty()) throw InvalidConfiguration("experiment: no algorithms");
  if (spec.num_runs == 0) throw InvalidConfiguration("experiment: num_runs must be positive");
  std::vector<const BenchmarkFunction*> functions;
  for (const auto& name : spec.function_names) functions.push_back(&registry.lookup(name));
  const DeParams de = spec.resolved_de();
  const AdedsParams adeds = spec.resolved_adeds();
  de.validate();
  adeds.validate();

  std::vector<AlgorithmRuns> groups;
  for (const auto* f : functions)
    for (Algorithm a : spec.algorithms) groups.push_back({f->name, a, {}});

  const std::size_t total = groups.size() * spec.num_runs;
  std::vector<std::optional<RunResult>> slots(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      const std::size_t g = task / spec.num_runs, run = task % spec.num_runs;
      try {
        const BenchmarkFunction& f = *functions[g / spec.algorithms.size()];
        RngStream rng(spec.root_seed, run);
        slots[task] = groups[g].algorithm == Algorithm::de ? run_de(f, de, rng)
                                                           : run_adeds(f, adeds, rng);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const std::size_t thread_count = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(total, 1));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t task = 0; task < total; ++task)
    groups[task / spec.num_runs].runs.push_back(std::move(*slots[task]));
  return groups;
}

namespace {

std::vector<double> finals(const AlgorithmRuns& group) {
  std::vector<double> v;
  for (const auto& r : group.runs) v.push_back(r.best_fitness);
  return v;
}

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same(const SampleSummary& a, const SampleSummary& b) {
  return a.n == b.n && same(a.mean, b.mean) && same(a.std_dev, b.std_dev);
}

}  // namespace

bool ComparisonRow::operator==(const ComparisonRow& o) const {
  return function == o.function && same(de, o.de) && same(adeds, o.adeds) &&
         same(de_success_rate, o.de_success_rate) &&
         same(adeds_success_rate, o.adeds_success_rate) &&
         same(ttest.t_statistic, o.ttest.t_statistic) && same(ttest.p_value, o.ttest.p_value) &&
         same(ttest.degrees_of_freedom, o.ttest.degrees_of_freedom) &&
         significance == o.significance;
}

std::vector<ComparisonRow> compare_algorithms(const std::vector<AlgorithmRuns>& results,
                                              double tolerance, const Registry& registry) {
  std::vector<std::string> order;
  for (const auto& g : results)
    if (std::find(order.begin(), order.end(), g.function) == order.end())
      order.push_back(g.function);

  std::vector<ComparisonRow> rows;
  for (const auto& name : order) {
    const AlgorithmRuns* de = nullptr;
    const AlgorithmRuns* adeds = nullptr;
    for (const auto& g : results) {
      if (g.function != name) continue;
      (g.algorithm == Algorithm::de ? de : adeds) = &g;
    }
    if (!de || !adeds)
      throw InvalidInput("compare_algorithms: " + name + " lacks results for both algorithms");
    if (de->runs.empty() || adeds->runs.empty())
      throw InvalidInput("compare_algorithms: " + name + " has an empty run list");

    const double target = registry.lookup(name).known_optimum_value;
    const auto de_finals = finals(*de), adeds_finals = finals(*adeds);
    ComparisonRow row{name,
                      summarize(de_finals),
                      summarize(adeds_finals),
                      success_rate(de->runs, target, tolerance),
                      success_rate(adeds->runs, target, tolerance),
                      {},
                      {}};
    if (de_finals.size() >= 2 && adeds_finals.size() >= 2) {
      row.ttest = welch_t_test(adeds_finals, de_finals);
    } else {
      constexpr double nan = std::numeric_limits<double>::quiet_NaN();
      row.ttest = {nan, nan, nan};
    }
    row.significance = std::string(significance_marker(row.ttest.p_value));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "function,algo,mean_fitness,std_dev,t_stat,p_value,success_rate,significance\n";
  for (const auto& r : rows) {
    const auto line = [&](std::string_view algo, const SampleSummary& s, double success) {
      out << r.function << ',' << algo << ',' << format_double(s.mean) << ','
          << format_double(s.std_dev) << ',' << format_double(r.ttest.t_statistic) << ','
          << format_double(r.ttest.p_value) << ',' << format_double(success) << ','
          << r.significance << '\n';
    };
    line("de", r.de, r.de_success_rate);
    line("adeds", r.adeds, r.adeds_success_rate);
  }
  return out.str();
}

namespace {

// JSON has no inf/nan; those travel as strings.
json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double number(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw InvalidInput("comparison json: not a number: " + s);
}

json summary_json(const SampleSummary& s, double success) {
  return {{"n", s.n},
          {"mean_fitness", number(s.mean)},
          {"std_dev", number(s.std_dev)},
          {"success_rate", number(success)}};
}

}  // namespace

std::string comparison_json(const std::vector<ComparisonRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"function", r.function},
                   {"de", summary_json(r.de, r.de_success_rate)},
                   {"adeds", summary_json(r.adeds, r.adeds_success_rate)},
                   {"t_stat", number(r.ttest.t_statistic)},
                   {"p_value", number(r.ttest.p_value)},
                   {"degrees_of_freedom", number(r.ttest.degrees_of_freedom)},
                   {"significance", r.significance}});
  }
  return json{{"rows", out}}.dump(2) + "\n";
}

std::vector<ComparisonRow> parse_comparison_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    std::vector<ComparisonRow> rows;
    for (const auto& j : doc.at("rows")) {
      const auto side = [](const json& s) {
        return SampleSummary{s.at("n").get<std::size_t>(), number(s.at("mean_fitness")),
                             number(s.at("std_dev"))};
      };
      rows.push_back(ComparisonRow{j.at("function").get<std::string>(),
                                   side(j.at("de")),
                                   side(j.at("adeds")),
                                   number(j.at("de").at("success_rate")),
                                   number(j.at("adeds").at("success_rate")),
                                   {number(j.at("t_stat")), number(j.at("p_value")),
                                    number(j.at("degrees_of_freedom"))},
                                   j.at("significance").get<std::string>()});
    }
    return rows;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("comparison json: ") + e.what());
  }
}

std::string history_csv(const RunResult& run) {
  std::ostringstream out;
  out << "generation,best_fitness,diversity,convergence_rate\n";
  for (std::size_t g = 0; g < run.history.size(); ++g) {
    const double rate = g == 0 ? 0.0 : convergence_rate(run.history, g);
    out << g << ',' << format_double(run.history[g]) << ','
        << format_double(run.diversity_history[g]) << ',' << format_double(rate) << '\n';
  }
  return out.str();
}

std::string runs_csv(const std::vector<AlgorithmRuns>& results) {
  std::ostringstream out;
  out << "function,algo,run,best_fitness,generations_executed,evaluations_used,terminated_by,"
         "best_position\n";
  for (const auto& g : results) {
    for (std::size_t r = 0; r < g.runs.size(); ++r) {
      const auto& run = g.runs[r];
      out << g.function << ',' << to_string(g.algorithm) << ',' << r << ','
          << format_double(run.best_fitness) << ',' << run.generations_executed << ','
          << run.evaluations_used << ',' << to_string(run.terminated_by) << ',';
      for (Eigen::Index j = 0; j < run.best_position.size(); ++j)
        out << (j ? ";" : "") << format_double(run.best_position[j]);
      out << '\n';
    }
  }
  return out.str();
}

std::string spec_json(const ExperimentSpec& spec, std::string_view command) {
  const DeParams de = spec.resolved_de();
  const AdedsParams adeds = spec.resolved_adeds();
  json algorithms = json::array();
  for (Algorithm a : spec.algorithms) algorithms.push_back(std::string(to_string(a)));
  const char* scope = adeds.local_search_scope == LocalSearchScope::generation_best ? "generation_best"
                      : adeds.local_search_scope == LocalSearchScope::best_trial  ? "best_trial"
                                                                                  : "every_trial";
  json doc = {
      {"command", std::string(command)},
      {"functions", spec.function_names},
      {"algorithms", algorithms},
      {"num_runs", spec.num_runs},
      {"population_size", spec.population_size},
      {"max_generations", spec.max_generations},
      {"root_seed", spec.root_seed},
      {"success_tolerance", spec.success_tolerance},
      {"de", {{"F", de.F}, {"CR", de.CR}}},
      {"adeds",
       {{"initial_mutation_rate", adeds.initial_mutation_rate},
        {"initial_crossover_rate", adeds.initial_crossover_rate},
        {"stagnation_limit", adeds.stagnation_limit},
        {"stagnation_tolerance", adeds.stagnation_tolerance},
        {"local_search_enabled", adeds.local_search_enabled},
        {"local_search_scope", scope},
        {"local_search_budget", adeds.local_search_budget},
        {"crossover_enabled", adeds.crossover_enabled}}},
  };
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("write failed: " + path.string());
}

void export_histories(const std::vector<AlgorithmRuns>& results,
                      const std::filesystem::path& dir) {
  for (const auto& g : results)
    for (std::size_t r = 0; r < g.runs.size(); ++r)
      write_text_file(dir / ("history_" + g.function + "_" + std::string(to_string(g.algorithm)) +
                             "_" + std::to_string(r) + ".csv"),
                      history_csv(g.runs[r]));
}

void export_results(const std::vector<ComparisonRow>& rows,
                    const std::vector<AlgorithmRuns>& results,
                    const std::vector<ExportFormat>& formats, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  for (ExportFormat format : formats) {
    if (format == ExportFormat::csv)
      write_text_file(dir / "comparison.csv", comparison_csv(rows));
    else
      write_text_file(dir / "comparison.json", comparison_json(rows));
  }
  export_histories(results, dir);
}

}  // namespace adeds
