#pragma once

// Reference computations for tests. Nothing here calls into the library.

#include <cmath>
#include <numbers>
#include <vector>

namespace nbai::test {

// Two-pass population variance.
inline double population_variance(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  m /= static_cast<double>(xs.size());
  double v = 0.0;
  for (double x : xs) v += (x - m) * (x - m);
  return v / static_cast<double>(xs.size());
}

inline double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

// Phi(x) by composite Simpson quadrature of the density over [x, 0] (or
// [0, x]); independent of erf.
inline double normal_cdf_quadrature(double x, int panels = 20000) {
  const double a = std::min(x, 0.0);
  const double b = std::max(x, 0.0);
  const double h = (b - a) / panels;
  double s = normal_pdf(a) + normal_pdf(b);
  for (int i = 1; i < panels; ++i) {
    s += (i % 2 == 1 ? 4.0 : 2.0) * normal_pdf(a + i * h);
  }
  const double area = s * h / 3.0;
  return x < 0.0 ? 0.5 - area : 0.5 + area;
}

// Half-width of the normal-approximation binomial interval.
inline double binomial_halfwidth(double p, double n, double z) {
  return z * std::sqrt(p * (1.0 - p) / n);
}

inline double pooled_se(double p1, double p2, double n) {
  return std::sqrt(p1 * (1.0 - p1) / n + p2 * (1.0 - p2) / n);
}

}  // namespace nbai::test
