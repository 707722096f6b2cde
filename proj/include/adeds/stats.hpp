#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "adeds/algorithms.hpp"

namespace adeds {

struct SampleSummary {
  std::size_t n;
  double mean;
  /// Sample standard deviation (n - 1 denominator); 0 for a single value.
  double std_dev;
};

struct TTestResult {
  /// May be +/-infinity when both samples have zero variance and different means.
  double t_statistic;
  /// Two-tailed; NaN marks an undefined test.
  double p_value;
  double degrees_of_freedom;
};

SampleSummary summarize(std::span<const double> samples);

/// Welch's unequal-variance t-test of mean(a) - mean(b), Satterthwaite degrees of freedom.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b);

/// Fraction of runs whose best fitness lies within `tolerance` of `target`.
double success_rate(std::span<const RunResult> results, double target, double tolerance);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

/// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double student_t_two_tailed_p(double t, double df);

/// "***" below 0.01, "**" below 0.05, otherwise empty.
std::string_view significance_marker(double p_value);

}  // namespace adeds
