#include <cmath>
#include <limits>
#include <vector>

#include "adeds/stats.hpp"
#include "doctest.h"
#include "welch_oracle.hpp"

using namespace adeds;

namespace {

RunResult finished_at(double best) {
  return RunResult{RealVector::Zero(1), best, {best}, {0.0}, 0, 0, Termination::max_generations,
                   Population(Eigen::MatrixXd::Zero(1, 1), Eigen::VectorXd::Constant(1, best))};
}

std::vector<double> draw_sample(RngStream& gen) {
  const std::size_t n = 2 + gen.index(29);
  const double centre = gen.uniform(-50, 50), spread = std::pow(10.0, gen.uniform(-3, 2));
  std::vector<double> s(n);
  for (auto& v : s) v = centre + spread * (gen.uniform() + gen.uniform() + gen.uniform() - 1.5);
  return s;
}

}  // namespace

TEST_CASE("summarize") {
  const std::vector<double> constant{5, 5, 5}, ramp{1, 2, 3, 4}, single{7};
  CHECK(summarize(constant).mean == 5.0);
  CHECK(summarize(constant).std_dev == 0.0);
  CHECK(summarize(ramp).mean == 2.5);
  CHECK(summarize(ramp).std_dev == doctest::Approx(1.2909944487358056));
  CHECK(summarize(single).mean == 7.0);
  CHECK(summarize(single).std_dev == 0.0);
  CHECK(summarize(ramp).n == 4);
  CHECK_THROWS_AS(summarize(std::vector<double>{}), InvalidInput);
}

TEST_CASE("welch degenerate cases") {
  const std::vector<double> a{1, 2, 3};
  auto r = welch_t_test(a, a);
  CHECK(r.t_statistic == 0.0);
  CHECK(r.p_value == 1.0);

  const std::vector<double> zeros{0, 0, 0}, ones{1, 1, 1};
  r = welch_t_test(zeros, ones);
  CHECK(r.t_statistic == -std::numeric_limits<double>::infinity());
  CHECK(r.p_value == 0.0);
  r = welch_t_test(ones, zeros);
  CHECK(r.t_statistic == std::numeric_limits<double>::infinity());

  r = welch_t_test(zeros, zeros);
  CHECK(r.t_statistic == 0.0);
  CHECK(r.p_value == 1.0);
  CHECK(r.degrees_of_freedom == 4.0);

  CHECK_THROWS_AS(welch_t_test(std::vector<double>{1}, a), InvalidInput);
}

TEST_CASE("welch on a sample with mean 8.429 and std 3.733 against ten zeros") {
  // 8.429 + 3.733 * standardized(1..10), rounded to double.
  const std::vector<double> a{2.8806380574574493, 4.1136073780224605, 5.3465766985874721,
                              6.5795460191524828, 7.8125153397174945, 9.0454846602825061,
                              10.278453980847518, 11.511423301412528, 12.744392621977539,
                              13.977361942542551};
  const std::vector<double> b(10, 0.0);
  CHECK(summarize(a).mean == doctest::Approx(8.429).epsilon(1e-14));
  CHECK(summarize(a).std_dev == doctest::Approx(3.733).epsilon(1e-14));

  // Frozen from the 50-digit reference.
  constexpr double kT = 7.1403263856306642, kP = 5.423131898359048e-05;
  const oracle::Welch ref = oracle::welch(a, b);
  CHECK(ref.t == doctest::Approx(kT).epsilon(1e-15));
  CHECK(ref.p == doctest::Approx(kP).epsilon(1e-12));

  const TTestResult r = welch_t_test(a, b);
  CHECK(std::abs(r.t_statistic - kT) <= 1e-9);
  CHECK(std::abs(r.p_value - kP) <= 1e-7);
  CHECK(r.p_value < 1e-3);
  CHECK(r.degrees_of_freedom == doctest::Approx(9.0));
  CHECK(welch_t_test(b, a).t_statistic == doctest::Approx(-kT));
}

TEST_CASE("property: welch agrees with the high-precision reference") {
  RngStream gen(500);
  for (int c = 0; c < 1000; ++c) {
    const auto a = draw_sample(gen), b = draw_sample(gen);
    const TTestResult r = welch_t_test(a, b);
    const oracle::Welch ref = oracle::welch(a, b);
    REQUIRE(std::abs(r.t_statistic - ref.t) <= 1e-9 * std::max(1.0, std::abs(ref.t)));
    REQUIRE(std::abs(r.p_value - ref.p) <= 1e-7);
    REQUIRE(r.degrees_of_freedom == doctest::Approx(ref.df).epsilon(1e-10));
    REQUIRE(r.p_value >= 0.0);
    REQUIRE(r.p_value <= 1.0);
    // Swapping the samples flips t and keeps p.
    const TTestResult s = welch_t_test(b, a);
    REQUIRE(s.t_statistic == doctest::Approx(-r.t_statistic));
    REQUIRE(s.p_value == doctest::Approx(r.p_value));
  }
}

TEST_CASE("incomplete beta and t tail") {
  CHECK(regularized_incomplete_beta(2, 3, 0) == 0.0);
  CHECK(regularized_incomplete_beta(2, 3, 1) == 1.0);
  // I_x(1, 1) = x and I_x(a, 1) = x^a.
  CHECK(regularized_incomplete_beta(1, 1, 0.3) == doctest::Approx(0.3));
  CHECK(regularized_incomplete_beta(2.5, 1, 0.4) == doctest::Approx(std::pow(0.4, 2.5)));
  CHECK(student_t_two_tailed_p(0.0, 5) == doctest::Approx(1.0));
  // Cauchy: P(|T| >= 1) = 1/2.
  CHECK(student_t_two_tailed_p(1.0, 1) == doctest::Approx(0.5));
  CHECK(student_t_two_tailed_p(INFINITY, 3) == 0.0);
  CHECK_THROWS_AS(regularized_incomplete_beta(0, 1, 0.5), InvalidInput);
  CHECK_THROWS_AS(student_t_two_tailed_p(1.0, 0), InvalidInput);
}

TEST_CASE("success_rate") {
  std::vector<RunResult> runs;
  for (int i = 0; i < 10; ++i) runs.push_back(finished_at(i < 7 ? 1e-4 : 0.5));
  CHECK(success_rate(runs, 0.0, 1e-3) == doctest::Approx(0.7));
  CHECK(success_rate(runs, 10.0, 1e-3) == 0.0);
  std::vector<RunResult> exact;
  for (int i = 0; i < 3; ++i) exact.push_back(finished_at(3.0));
  CHECK(success_rate(exact, 3.0, 0.0) == 1.0);
  CHECK_THROWS_AS(success_rate(std::vector<RunResult>{}, 0, 1e-3), InvalidInput);
}

TEST_CASE("significance markers") {
  CHECK(significance_marker(0.001) == "***");
  CHECK(significance_marker(0.03) == "**");
  CHECK(significance_marker(0.2) == "");
  CHECK(significance_marker(std::nan("")) == "");
}
