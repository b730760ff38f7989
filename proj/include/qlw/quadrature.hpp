#pragma once

#include <cmath>

#include "qlw/errors.hpp"

namespace qlw {

// Adaptive Simpson quadrature with interval bisection.  The integrands in
// this project are smooth and compactly supported, so plain Simpson with the
// standard 1/15 error estimate converges quickly.
namespace detail {

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth, double& worst) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth <= 0) {
    if (depth <= 0 && std::abs(err) > worst) worst = std::abs(err);
    return left + right + err;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, worst) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, worst);
}

}  // namespace detail

// Integrates f over [a,b] to absolute tolerance tol.  Throws NumericalError
// with the achieved tolerance attached if max_depth bisections do not
// suffice.
template <class F>
double integrate(const F& f, double a, double b, double tol, int max_depth = 48) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double worst = 0.0;
  double v = detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth, worst);
  if (worst > tol) {
    throw NumericalError("quadrature did not reach requested tolerance", worst,
                         0.5 * (a + b));
  }
  return v;
}

}  // namespace qlw
