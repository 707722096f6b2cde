#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adeds/core.hpp"

namespace adeds {

enum class Category { many_local_optima, plate_shaped, valley_shaped, other, demo };

std::string_view to_string(Category category);
/// Parses the category identifiers used on the command line; throws InvalidInput otherwise.
Category parse_category(std::string_view text);

struct BenchmarkFunction {
  std::string name;
  Category category;
  Eigen::Index dimension;
  Bounds default_bounds;
  double known_optimum_value;
  std::vector<RealVector> known_optimizers;
  /// Largest |f(x*) - known_optimum_value| expected at the published optimizer coordinates.
  double optimum_tolerance = 1e-4;
  std::string note;
  Objective objective;

  /// Evaluates after checking the dimension.
  double operator()(const RealVector& x) const;
};

/// Immutable name -> function table. Built once; safe for concurrent reads.
class Registry {
 public:
  explicit Registry(std::vector<BenchmarkFunction> functions);

  /// The catalog of every function used in the experiments.
  static const Registry& standard();

  /// Resolves canonical names and accepted aliases ("levy" -> "levy_n13").
  const BenchmarkFunction& lookup(std::string_view name) const;
  bool contains(std::string_view name) const;
  double evaluate(std::string_view name, const RealVector& x) const;

  /// Sorted canonical names, optionally restricted to one category.
  std::vector<std::string> list_functions(std::optional<Category> filter = std::nullopt) const;

 private:
  std::map<std::string, BenchmarkFunction, std::less<>> entries_;
  std::map<std::string, std::string, std::less<>> aliases_;
};

inline const BenchmarkFunction& lookup(std::string_view name) {
  return Registry::standard().lookup(name);
}

inline double evaluate(std::string_view name, const RealVector& x) {
  return Registry::standard().evaluate(name, x);
}

inline std::vector<std::string> list_functions(std::optional<Category> filter = std::nullopt) {
  return Registry::standard().list_functions(filter);
}

/// sin(x0) + cos(x1) over [-10, 10]^dimension. Coordinates beyond the first two do not
/// enter the objective.
BenchmarkFunction make_sinusoidal(Eigen::Index dimension);

namespace functions {

// Raw formulas. All are two-dimensional except rastrigin/ackley/rosenbrock/dixon_price/
// sphere (any dimension) and devilliers_glasser_02 (five).
double ackley(const RealVector& x);
double bukin_n6(const RealVector& x);
double rastrigin(const RealVector& x);
double cross_in_tray(const RealVector& x);
double levy_n13(const RealVector& x);
double eggholder(const RealVector& x);
double schaffer_n2(const RealVector& x);
double schwefel_2d(const RealVector& x);
double shubert(const RealVector& x);
double drop_wave(const RealVector& x);
double himmelblau(const RealVector& x);
double booth(const RealVector& x);
double matyas(const RealVector& x);
double mccormick(const RealVector& x);
double three_hump_camel(const RealVector& x);
double six_hump_camel(const RealVector& x);
double rosenbrock(const RealVector& x);
double dixon_price(const RealVector& x);
double beale(const RealVector& x);
double goldstein_price(const RealVector& x);
double forrester_2d(const RealVector& x);
double devilliers_glasser_02(const RealVector& x);
double sinusoidal(const RealVector& x);
double sinusoidal_alt(const RealVector& x);
double sphere(const RealVector& x);

}  // namespace functions

}  // namespace adeds
