#pragma once

// Test-side numerical oracles, independent of the library's quadrature and
// integrators: Romberg integration and an observed-order estimator.

#include <array>
#include <cmath>
#include <functional>

namespace oracles {

// Romberg integration on [a,b]; rich enough for the smooth compactly
// supported integrands used in the tests.
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      int levels = 20, double tol = 1e-14) {
  std::array<std::array<double, 24>, 24> R{};
  double h = b - a;
  R[0][0] = 0.5 * h * (f(a) + f(b));
  for (int i = 1; i < levels; ++i) {
    h *= 0.5;
    double sum = 0.0;
    long n = 1L << (i - 1);
    for (long k = 0; k < n; ++k) sum += f(a + (2 * k + 1) * h);
    R[i][0] = 0.5 * R[i - 1][0] + h * sum;
    double p4 = 4.0;
    for (int j = 1; j <= i; ++j) {
      R[i][j] = R[i][j - 1] + (R[i][j - 1] - R[i - 1][j - 1]) / (p4 - 1.0);
      p4 *= 4.0;
    }
    if (i > 3 && std::abs(R[i][i] - R[i - 1][i - 1]) < tol) return R[i][i];
  }
  return R[levels - 1][levels - 1];
}

// Observed convergence order from errors at steps h and h/2.
inline double observed_order(double err_h, double err_h2) {
  return std::log2(std::abs(err_h) / std::abs(err_h2));
}

}  // namespace oracles
