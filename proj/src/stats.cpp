#include "adeds/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adeds {

namespace {

// Modified Lentz evaluation of the continued fraction for I_x(a, b); converges
// quickly for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEpsilon = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

SampleSummary summarize(std::span<const double> samples) {
  if (samples.empty()) throw InvalidInput("summarize: empty sample");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  const double std_dev = samples.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return {samples.size(), mean, std_dev};
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidInput("incomplete beta: a and b must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("incomplete beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_tailed_p(double t, double df) {
  if (!(df > 0.0)) throw InvalidInput("student t: degrees of freedom must be positive");
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  // P(|T| >= |t|) = I_{df / (df + t^2)}(df / 2, 1 / 2)
  const double x = df / (df + t * t);
  return std::clamp(regularized_incomplete_beta(df / 2.0, 0.5, x), 0.0, 1.0);
}

TTestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    throw InvalidInput("welch_t_test: each sample needs at least two values");
  const SampleSummary sa = summarize(a), sb = summarize(b);
  const double na = static_cast<double>(sa.n), nb = static_cast<double>(sb.n);
  const double va = sa.std_dev * sa.std_dev / na;
  const double vb = sb.std_dev * sb.std_dev / nb;
  const double diff = sa.mean - sb.mean;
  const double se2 = va + vb;

  if (se2 == 0.0) {
    const double df = na + nb - 2.0;
    if (diff == 0.0) return {0.0, 1.0, df};
    return {std::copysign(std::numeric_limits<double>::infinity(), diff), 0.0, df};
  }
  const double t = diff / std::sqrt(se2);
  const double df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  return {t, student_t_two_tailed_p(t, df), df};
}

double success_rate(std::span<const RunResult> results, double target, double tolerance) {
  if (results.empty()) throw InvalidInput("success_rate: no results");
  if (!(tolerance >= 0.0)) throw InvalidInput("success_rate: tolerance must be nonnegative");
  const auto hits = std::count_if(results.begin(), results.end(), [&](const RunResult& r) {
    return std::abs(r.best_fitness - target) <= tolerance;
  });
  return static_cast<double>(hits) / static_cast<double>(results.size());
}

std::string_view significance_marker(double p_value) {
  if (p_value < 0.01) return "***";
  if (p_value < 0.05) return "**";
  return "";
}

}  // namespace adeds
