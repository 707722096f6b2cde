#pragma once

// Welch t-test evaluated at 50 significant digits with Boost.Math, used as an
// independent reference for the library implementation.

#include <boost/math/special_functions/beta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <span>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

struct Welch {
  double t;
  double p;
  double df;
};

inline Welch welch(std::span<const double> a, std::span<const double> b) {
  const auto moments = [](std::span<const double> s, Big& mean, Big& var) {
    mean = 0;
    for (double v : s) mean += Big(v);
    mean /= s.size();
    var = 0;
    for (double v : s) var += (Big(v) - mean) * (Big(v) - mean);
    var /= s.size() - 1;
  };
  Big ma, va, mb, vb;
  moments(a, ma, va);
  moments(b, mb, vb);
  const Big sa = va / a.size(), sb = vb / b.size();
  const Big t = (ma - mb) / sqrt(sa + sb);
  const Big df = (sa + sb) * (sa + sb) /
                 (sa * sa / (a.size() - 1) + sb * sb / (b.size() - 1));
  const Big p = boost::math::ibeta(df / 2, Big(0.5), df / (df + t * t));
  return {static_cast<double>(t), static_cast<double>(p), static_cast<double>(df)};
}

}  // namespace oracle
