#include "adeds/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace adeds {

using std::numbers::pi;

namespace functions {

namespace {

void require_dimension(const RealVector& x, Eigen::Index n, const char* name) {
  if (x.size() != n)
    throw InvalidInput(std::string(name) + ": expected dimension " + std::to_string(n) +
                       ", got " + std::to_string(x.size()));
}

void require_nonempty(const RealVector& x, const char* name) {
  if (x.size() == 0) throw InvalidInput(std::string(name) + ": empty input");
}

double sq(double v) { return v * v; }

}  // namespace

double ackley(const RealVector& x) {
  require_nonempty(x, "ackley");
  constexpr double a = 20.0, b = 0.2, c = 2.0 * pi;
  const double n = static_cast<double>(x.size());
  const double mean_sq = x.squaredNorm() / n;
  const double mean_cos = (c * x.array()).cos().sum() / n;
  return -a * std::exp(-b * std::sqrt(mean_sq)) - std::exp(mean_cos) + a + std::exp(1.0);
}

double bukin_n6(const RealVector& x) {
  require_dimension(x, 2, "bukin_n6");
  return 100.0 * std::sqrt(std::abs(x[1] - 0.01 * sq(x[0]))) + 0.01 * std::abs(x[0] + 10.0);
}

double rastrigin(const RealVector& x) {
  require_nonempty(x, "rastrigin");
  constexpr double a = 10.0;
  return a * static_cast<double>(x.size()) +
         (x.array().square() - a * (2.0 * pi * x.array()).cos()).sum();
}

double cross_in_tray(const RealVector& x) {
  require_dimension(x, 2, "cross_in_tray");
  const double e = std::abs(100.0 - std::hypot(x[0], x[1]) / pi);
  return -0.0001 * std::pow(std::abs(std::sin(x[0]) * std::sin(x[1]) * std::exp(e)) + 1.0, 0.1);
}

double levy_n13(const RealVector& x) {
  require_dimension(x, 2, "levy_n13");
  return sq(std::sin(3.0 * pi * x[0])) + sq(x[0] - 1.0) * (1.0 + sq(std::sin(3.0 * pi * x[1]))) +
         sq(x[1] - 1.0) * (1.0 + sq(std::sin(2.0 * pi * x[1])));
}

double eggholder(const RealVector& x) {
  require_dimension(x, 2, "eggholder");
  const double a = std::sqrt(std::abs(x[1] + x[0] / 2.0 + 47.0));
  const double b = std::sqrt(std::abs(x[0] - (x[1] + 47.0)));
  return -(x[1] + 47.0) * std::sin(a) - x[0] * std::sin(b);
}

double schaffer_n2(const RealVector& x) {
  require_dimension(x, 2, "schaffer_n2");
  const double x2 = sq(x[0]), y2 = sq(x[1]);
  return 0.5 + (sq(std::sin(x2 - y2)) - 0.5) / sq(1.0 + 0.001 * (x2 + y2));
}

double schwefel_2d(const RealVector& x) {
  require_dimension(x, 2, "schwefel_2d");
  return 418.9829 * 2.0 - x[0] * std::sin(std::sqrt(std::abs(x[0]))) -
         x[1] * std::sin(std::sqrt(std::abs(x[1])));
}

double shubert(const RealVector& x) {
  require_dimension(x, 2, "shubert");
  double s0 = 0.0, s1 = 0.0;
  for (int i = 1; i <= 5; ++i) {
    s0 += i * std::cos((i + 1) * x[0] + i);
    s1 += i * std::cos((i + 1) * x[1] + i);
  }
  return s0 * s1;
}

double drop_wave(const RealVector& x) {
  require_dimension(x, 2, "drop_wave");
  const double r2 = x.squaredNorm();
  return -(1.0 + std::cos(12.0 * std::sqrt(r2))) / (0.5 * r2 + 2.0);
}

double himmelblau(const RealVector& x) {
  require_dimension(x, 2, "himmelblau");
  return sq(sq(x[0]) + x[1] - 11.0) + sq(x[0] + sq(x[1]) - 7.0);
}

double booth(const RealVector& x) {
  require_dimension(x, 2, "booth");
  return sq(x[0] + 2.0 * x[1] - 7.0) + sq(2.0 * x[0] + x[1] - 5.0);
}

double matyas(const RealVector& x) {
  require_dimension(x, 2, "matyas");
  return 0.26 * (sq(x[0]) + sq(x[1])) - 0.48 * x[0] * x[1];
}

double mccormick(const RealVector& x) {
  require_dimension(x, 2, "mccormick");
  return std::sin(x[0] + x[1]) + sq(x[0] - x[1]) - 1.5 * x[0] + 2.5 * x[1] + 1.0;
}

double three_hump_camel(const RealVector& x) {
  require_dimension(x, 2, "three_hump_camel");
  const double x2 = sq(x[0]);
  return 2.0 * x2 - 1.05 * sq(x2) + x2 * x2 * x2 / 6.0 + x[0] * x[1] + sq(x[1]);
}

double six_hump_camel(const RealVector& x) {
  require_dimension(x, 2, "six_hump_camel");
  const double x2 = sq(x[0]), y2 = sq(x[1]);
  return (4.0 - 2.1 * x2 + x2 * x2 / 3.0) * x2 + x[0] * x[1] + (-4.0 + 4.0 * y2) * y2;
}

double rosenbrock(const RealVector& x) {
  if (x.size() < 2) throw InvalidInput("rosenbrock: dimension must be at least 2");
  double sum = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i)
    sum += 100.0 * sq(x[i + 1] - sq(x[i])) + sq(1.0 - x[i]);
  return sum;
}

double dixon_price(const RealVector& x) {
  require_nonempty(x, "dixon_price");
  double sum = sq(x[0] - 1.0);
  for (Eigen::Index i = 1; i < x.size(); ++i)
    sum += static_cast<double>(i + 1) * sq(2.0 * sq(x[i]) - x[i - 1]);
  return sum;
}

double beale(const RealVector& x) {
  require_dimension(x, 2, "beale");
  const double a = x[0], b = x[1];
  return sq(1.5 - a + a * b) + sq(2.25 - a + a * b * b) + sq(2.625 - a + a * b * b * b);
}

double goldstein_price(const RealVector& x) {
  require_dimension(x, 2, "goldstein_price");
  const double a = x[0], b = x[1];
  const double f1 =
      1.0 + sq(a + b + 1.0) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
  const double f2 = 30.0 + sq(2.0 * a - 3.0 * b) *
                               (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b +
                                27.0 * b * b);
  return f1 * f2;
}

double forrester_2d(const RealVector& x) {
  require_dimension(x, 2, "forrester_2d");
  const auto one = [](double v) { return sq(6.0 * v - 2.0) * std::sin(12.0 * v - 4.0); };
  return one(x[0]) + one(x[1]);
}

namespace {

struct GlasserData {
  std::array<double, 24> t;
  std::array<double, 24> y;
};

const GlasserData& glasser_data() {
  static const GlasserData data = [] {
    GlasserData d{};
    for (int i = 0; i < 24; ++i) {
      const double t = 0.1 * i;
      d.t[i] = t;
      d.y[i] = 53.81 * std::pow(1.27, t) * std::tanh(3.012 * t + std::sin(2.13 * t)) *
               std::cos(std::exp(0.507) * t);
    }
    return d;
  }();
  return data;
}

}  // namespace

double devilliers_glasser_02(const RealVector& x) {
  require_dimension(x, 5, "devilliers_glasser_02");
  const auto& d = glasser_data();
  double sum = 0.0;
  for (std::size_t i = 0; i < d.t.size(); ++i) {
    const double t = d.t[i];
    const double model = x[0] * std::pow(x[1], t) * std::tanh(x[2] * t + std::sin(x[3] * t)) *
                         std::cos(t * std::exp(x[4]));
    sum += sq(model - d.y[i]);
  }
  return sum;
}

double sinusoidal(const RealVector& x) {
  if (x.size() < 2) throw InvalidInput("sinusoidal: dimension must be at least 2");
  return std::sin(x[0]) + std::cos(x[1]);
}

double sinusoidal_alt(const RealVector& x) {
  require_dimension(x, 2, "sinusoidal_alt");
  return std::sin(x[0]) + std::sin(x[1]);
}

double sphere(const RealVector& x) {
  require_nonempty(x, "sphere");
  return x.squaredNorm();
}

}  // namespace functions

std::string_view to_string(Category category) {
  switch (category) {
    case Category::many_local_optima: return "many_local_optima";
    case Category::plate_shaped: return "plate_shaped";
    case Category::valley_shaped: return "valley_shaped";
    case Category::other: return "other";
    case Category::demo: return "demo";
  }
  return "unknown";
}

Category parse_category(std::string_view text) {
  for (auto c : {Category::many_local_optima, Category::plate_shaped, Category::valley_shaped,
                 Category::other, Category::demo})
    if (to_string(c) == text) return c;
  throw InvalidInput("unknown category: " + std::string(text));
}

double BenchmarkFunction::operator()(const RealVector& x) const {
  if (x.size() != dimension)
    throw InvalidInput(name + ": expected dimension " + std::to_string(dimension) + ", got " +
                       std::to_string(x.size()));
  return objective(x);
}

namespace {

RealVector vec(std::initializer_list<double> values) {
  RealVector v(static_cast<Eigen::Index>(values.size()));
  std::copy(values.begin(), values.end(), v.data());
  return v;
}

BenchmarkFunction square_2d(std::string name, Category category, double low, double high,
                            double optimum, std::vector<RealVector> optimizers, Objective f,
                            std::string note = {}) {
  return BenchmarkFunction{std::move(name), category, 2, Bounds::uniform(2, low, high), optimum,
                           std::move(optimizers), 1e-4, std::move(note), std::move(f)};
}

std::vector<BenchmarkFunction> standard_catalog() {
  namespace fn = functions;
  using C = Category;
  std::vector<BenchmarkFunction> all;

  all.push_back(square_2d("ackley", C::many_local_optima, -32.768, 32.768, 0.0, {vec({0, 0})},
                          fn::ackley, "a=20, b=0.2, c=2*pi"));
  all.push_back(BenchmarkFunction{"bukin_n6", C::many_local_optima, 2, Bounds{{-15, -5}, {-3, 3}},
                                  0.0, {vec({-10, 1})}, 1e-4, "absolute-value form", fn::bukin_n6});
  all.push_back(square_2d("rastrigin", C::many_local_optima, -5.12, 5.12, 0.0, {vec({0, 0})},
                          fn::rastrigin));
  {
    const double c = 1.349406608602084;
    all.push_back(square_2d("cross_in_tray", C::many_local_optima, -10, 10, -2.06262,
                            {vec({c, c}), vec({c, -c}), vec({-c, c}), vec({-c, -c})},
                            fn::cross_in_tray));
  }
  all.push_back(square_2d("levy_n13", C::many_local_optima, -10, 10, 0.0, {vec({1, 1})},
                          fn::levy_n13, "two-dimensional Levy N.13; alias 'levy'"));
  all.push_back(square_2d("eggholder", C::many_local_optima, -512, 512, -959.6407,
                          {vec({512, 404.2319})}, fn::eggholder));
  all.push_back(square_2d("schaffer_n2", C::many_local_optima, -100, 100, 0.0, {vec({0, 0})},
                          fn::schaffer_n2));
  {
    BenchmarkFunction f = square_2d("schwefel_2d", C::many_local_optima, -500, 500, 0.0,
                                    {vec({420.9687, 420.9687})}, fn::schwefel_2d,
                                    "constant 418.9829*2 leaves a small positive residual");
    f.optimum_tolerance = 3e-3;
    all.push_back(std::move(f));
  }
  all.push_back(square_2d("shubert", C::many_local_optima, -10, 10, -186.7309,
                          {vec({-7.083506409397382, 4.858056877022195}),
                           vec({5.482864204912186, 4.8580568776705295}),
                           vec({-1.4251284293683706, -7.083506405809937}),
                           vec({4.858056877022195, -7.083506409397382})},
                          fn::shubert, "product form; 18 global minima"));
  all.push_back(square_2d("drop_wave", C::many_local_optima, -5.12, 5.12, -1.0, {vec({0, 0})},
                          fn::drop_wave));
  all.push_back(square_2d("himmelblau", C::many_local_optima, -5, 5, 0.0,
                          {vec({3, 2}), vec({-2.805118086952745, 3.131312518250573}),
                           vec({-3.779310253377747, -3.283185991286170}),
                           vec({3.584428340330492, -1.848126526964404})},
                          fn::himmelblau));

  all.push_back(square_2d("booth", C::plate_shaped, -10, 10, 0.0, {vec({1, 3})}, fn::booth));
  all.push_back(square_2d("matyas", C::plate_shaped, -10, 10, 0.0, {vec({0, 0})}, fn::matyas));
  all.push_back(BenchmarkFunction{"mccormick", C::plate_shaped, 2, Bounds{{-1.5, 4}, {-3, 4}},
                                  -1.9133, {vec({-0.54719, -1.54719})}, 1e-4, "",
                                  fn::mccormick});

  all.push_back(square_2d("rosenbrock", C::valley_shaped, -5, 10, 0.0, {vec({1, 1})},
                          fn::rosenbrock));
  all.push_back(square_2d("three_hump_camel", C::valley_shaped, -5, 5, 0.0, {vec({0, 0})},
                          fn::three_hump_camel));
  all.push_back(BenchmarkFunction{"six_hump_camel", C::valley_shaped, 2, Bounds{{-3, 3}, {-2, 2}},
                                  -1.0316, {vec({0.0898, -0.7126}), vec({-0.0898, 0.7126})}, 1e-4,
                                  "", fn::six_hump_camel});
  all.push_back(square_2d("dixon_price", C::valley_shaped, -10, 10, 0.0,
                          {vec({1, std::numbers::sqrt2 / 2}), vec({1, -std::numbers::sqrt2 / 2})},
                          fn::dixon_price));

  all.push_back(square_2d("beale", C::other, -4.5, 4.5, 0.0, {vec({3, 0.5})}, fn::beale));
  all.push_back(square_2d("goldstein_price", C::other, -2, 2, 3.0, {vec({0, -1})},
                          fn::goldstein_price));
  {
    const double m = 0.7572487585232999;
    all.push_back(square_2d("forrester_2d", C::other, 0, 1, -12.041480111534165, {vec({m, m})},
                            fn::forrester_2d, "separable sum of the 1-D Forrester function"));
  }
  all.push_back(BenchmarkFunction{"devilliers_glasser_02", C::other, 5, Bounds::uniform(5, 1, 60),
                                  0.0, {vec({53.81, 1.27, 3.012, 2.13, 0.507})}, 1e-4,
                                  "24 samples, t_i = 0.1(i-1); the generating point has x5 = 0.507, below the box", fn::devilliers_glasser_02});

  all.push_back(make_sinusoidal(2));
  all.push_back(square_2d("sinusoidal_alt", C::demo, -10, 10, -2.0,
                          {vec({-pi / 2, -pi / 2})}, fn::sinusoidal_alt, "sin(x0) + sin(x1)"));
  all.push_back(square_2d("sphere", C::demo, -10, 10, 0.0, {vec({0, 0})}, fn::sphere));
  return all;
}

}  // namespace

BenchmarkFunction make_sinusoidal(Eigen::Index dimension) {
  if (dimension < 2) throw InvalidInput("sinusoidal: dimension must be at least 2");
  RealVector a = RealVector::Zero(dimension), b = RealVector::Zero(dimension);
  a[0] = -pi / 2;
  a[1] = pi;
  b[0] = -pi / 2;
  b[1] = -pi;
  return BenchmarkFunction{"sinusoidal", Category::demo, dimension,
                           Bounds::uniform(dimension, -10, 10), -2.0, {a, b}, 1e-4,
                           "sin(x0) + cos(x1)", functions::sinusoidal};
}

Registry::Registry(std::vector<BenchmarkFunction> functions) {
  for (auto& f : functions) {
    if (f.default_bounds.dimension() != f.dimension)
      throw InvalidConfiguration(f.name + ": bounds dimension does not match");
    std::string key = f.name;
    if (!entries_.emplace(key, std::move(f)).second)
      throw InvalidConfiguration("duplicate function name: " + key);
  }
}

const Registry& Registry::standard() {
  static const Registry registry = [] {
    Registry r(standard_catalog());
    r.aliases_ = {{"levy", "levy_n13"},       {"bukin", "bukin_n6"},
                  {"schaffer", "schaffer_n2"}, {"schwefel", "schwefel_2d"},
                  {"forrester", "forrester_2d"}, {"devilliersglasser02", "devilliers_glasser_02"}};
    return r;
  }();
  return registry;
}

const BenchmarkFunction& Registry::lookup(std::string_view name) const {
  if (auto it = entries_.find(name); it != entries_.end()) return it->second;
  if (auto a = aliases_.find(name); a != aliases_.end()) return entries_.find(a->second)->second;
  throw UnknownFunction(std::string(name));
}

bool Registry::contains(std::string_view name) const {
  return entries_.contains(name) || aliases_.contains(name);
}

double Registry::evaluate(std::string_view name, const RealVector& x) const {
  return lookup(name)(x);
}

std::vector<std::string> Registry::list_functions(std::optional<Category> filter) const {
  std::vector<std::string> names;
  for (const auto& [name, f] : entries_)
    if (!filter || f.category == *filter) names.push_back(name);
  return names;
}

}  // namespace adeds
