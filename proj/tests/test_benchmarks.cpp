#include <chrono>
#include <cmath>
#include <numbers>
#include <set>

#include "adeds/benchmarks.hpp"
#include "doctest.h"

using namespace adeds;

namespace {

RealVector v(double a, double b) { return RealVector{{a, b}}; }

}  // namespace

TEST_CASE("published minima by direct substitution") {
  CHECK(evaluate("rastrigin", v(0, 0)) == doctest::Approx(0.0));
  CHECK(evaluate("ackley", v(0, 0)) == doctest::Approx(0.0));
  CHECK(evaluate("himmelblau", v(3, 2)) == 0.0);
  CHECK(std::abs(evaluate("eggholder", v(512, 404.2319)) + 959.6407) <= 1e-3);
  CHECK(evaluate("goldstein_price", v(0, -1)) == doctest::Approx(3.0));
  CHECK(std::abs(evaluate("mccormick", v(-0.54719, -1.54719)) + 1.9133) <= 1e-3);
  CHECK(evaluate("rosenbrock", v(1, 1)) == 0.0);
  CHECK(evaluate("drop_wave", v(0, 0)) == -1.0);
  CHECK(std::abs(evaluate("cross_in_tray", v(1.3491, 1.3491)) + 2.06262) <= 1e-4);
  CHECK(evaluate("matyas", v(0, 0)) == 0.0);
  CHECK(evaluate("levy_n13", v(1, 1)) == doctest::Approx(0.0));
  CHECK(evaluate("booth", v(1, 3)) == 0.0);
  CHECK(evaluate("bukin_n6", v(-10, 1)) == 0.0);
  CHECK(evaluate("schaffer_n2", v(0, 0)) == 0.0);
  CHECK(std::abs(evaluate("schwefel_2d", v(420.9687, 420.9687))) <= 3e-3);
  CHECK(evaluate("three_hump_camel", v(0, 0)) == 0.0);
  CHECK(std::abs(evaluate("six_hump_camel", v(0.0898, -0.7126)) + 1.0316) <= 1e-3);
  CHECK(std::abs(evaluate("dixon_price", v(1, 0.70710678))) <= 1e-6);
  CHECK(evaluate("beale", v(3, 0.5)) == 0.0);
  CHECK(std::abs(evaluate("forrester_2d", v(0.757249, 0.757249)) + 12.0415) <= 1e-2);
  const RealVector dg{{53.81, 1.27, 3.012, 2.13, 0.507}};
  CHECK(std::abs(evaluate("devilliers_glasser_02", dg)) <= 1e-6);
  CHECK(evaluate("sinusoidal", v(-std::numbers::pi / 2, std::numbers::pi)) == doctest::Approx(-2.0));
  CHECK(evaluate("sphere", v(0, 0)) == 0.0);
  CHECK(evaluate("booth", v(0, 0)) == 74.0);
}

TEST_CASE("forrester minimizer agrees with a dense grid oracle") {
  // 1-D term (6x-2)^2 sin(12x-4), grid then golden-section refinement.
  const auto g = [](double x) { return (6 * x - 2) * (6 * x - 2) * std::sin(12 * x - 4); };
  double best = 0.0;
  for (int i = 0; i <= 100000; ++i)
    if (g(i / 100000.0) < g(best)) best = i / 100000.0;
  double lo = best - 1e-5, hi = best + 1e-5;
  const double r = (std::sqrt(5.0) - 1) / 2;
  for (int k = 0; k < 200; ++k) {
    const double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
    if (g(a) < g(b))
      hi = b;
    else
      lo = a;
  }
  const double x = (lo + hi) / 2;
  const auto& f = lookup("forrester_2d");
  CHECK(f.known_optimizers.front()[0] == doctest::Approx(x).epsilon(1e-7));
  CHECK(f.known_optimum_value == doctest::Approx(2 * g(x)).epsilon(1e-12));
}

TEST_CASE("every registered optimizer reproduces its stated minimum") {
  const Registry& registry = Registry::standard();
  for (const auto& name : registry.list_functions()) {
    const auto& f = registry.lookup(name);
    CAPTURE(name);
    for (const auto& x : f.known_optimizers) {
      // The generating parameters of this data-fit problem sit outside its search box.
      if (name != "devilliers_glasser_02") CHECK(f.default_bounds.contains(x));
      CHECK(std::abs(f(x) - f.known_optimum_value) <= f.optimum_tolerance);
    }
  }
}

TEST_CASE("registry lookup and catalog") {
  const auto& rastrigin = lookup("rastrigin");
  CHECK(rastrigin.dimension == 2);
  CHECK(rastrigin.default_bounds.low() == RealVector::Constant(2, -5.12));
  CHECK(rastrigin.default_bounds.high() == RealVector::Constant(2, 5.12));
  const auto& egg = lookup("eggholder");
  CHECK(egg.default_bounds.low() == RealVector::Constant(2, -512));
  CHECK(egg.default_bounds.high() == RealVector::Constant(2, 512));
  CHECK_THROWS_AS(lookup("nosuchfn"), UnknownFunction);
  try {
    lookup("nosuchfn");
  } catch (const UnknownFunction& e) {
    CHECK(e.name() == "nosuchfn");
  }

  CHECK(lookup("levy").name == "levy_n13");
  CHECK(lookup("bukin").name == "bukin_n6");
  CHECK(Registry::standard().contains("schwefel"));

  const auto many = list_functions(Category::many_local_optima);
  CHECK(many.size() == 11);
  CHECK(std::set<std::string>(many.begin(), many.end()) ==
        std::set<std::string>{"ackley", "bukin_n6", "cross_in_tray", "drop_wave", "eggholder",
                              "himmelblau", "levy_n13", "rastrigin", "schaffer_n2", "schwefel_2d",
                              "shubert"});
  CHECK(list_functions(Category::plate_shaped) ==
        std::vector<std::string>{"booth", "matyas", "mccormick"});
  CHECK(list_functions().size() >= 24);
  CHECK(parse_category("valley_shaped") == Category::valley_shaped);
  CHECK_THROWS_AS(parse_category("round"), InvalidInput);
}

TEST_CASE("dimension is checked") {
  CHECK_THROWS_AS(evaluate("booth", RealVector::Zero(3)), InvalidInput);
  CHECK_THROWS_AS(evaluate("devilliers_glasser_02", RealVector::Zero(2)), InvalidInput);
  const auto f3 = make_sinusoidal(3);
  CHECK(f3(RealVector{{-std::numbers::pi / 2, std::numbers::pi, 7.0}}) == doctest::Approx(-2.0));
  CHECK_THROWS_AS(make_sinusoidal(1), InvalidInput);
}

TEST_CASE("property: catalog values stay at or above the known minimum inside the box") {
  const Registry& registry = Registry::standard();
  RngStream gen(200);
  for (const auto& name : registry.list_functions()) {
    const auto& f = registry.lookup(name);
    if (name == "sphere" || name == "sinusoidal" || name == "sinusoidal_alt") continue;
    CAPTURE(name);
    for (int c = 0; c < 1000; ++c) {
      RealVector x(f.dimension);
      for (Eigen::Index j = 0; j < x.size(); ++j)
        x[j] = gen.uniform(f.default_bounds.low()[j], f.default_bounds.high()[j]);
      const double y = f(x);
      REQUIRE(std::isfinite(y));
      REQUIRE(y >= f.known_optimum_value - f.optimum_tolerance);
    }
  }
}

TEST_CASE("catalog evaluation is fast") {
  const auto start = std::chrono::steady_clock::now();
  double sink = 0;
  for (const auto& name : list_functions())
    for (const auto& x : lookup(name).known_optimizers) sink += lookup(name)(x);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(std::isfinite(sink));
  CHECK(seconds < 1.0);
}
