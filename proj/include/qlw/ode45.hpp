#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "qlw/errors.hpp"

namespace qlw {

// Embedded Dormand-Prince 5(4) integrator for small fixed-size systems.
// Integrates from t0 to t1 (either direction) with adaptive steps; the error
// per unit step is controlled so the accumulated error is about tol.

template <int N>
using State = std::array<double, N>;

template <int N>
struct Rk45Status {
  double t = 0.0;
  State<N> y{};
  bool halted = false;  // stop() asked to end the integration early
  long steps = 0;
};

namespace rk45_detail {
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                 e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                 e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
}  // namespace rk45_detail

// stop(t, y) is checked after every accepted step; returning true ends the
// integration at that point with status.halted set.  h_max caps the step so
// short features of f cannot be stepped over.
template <int N, class F, class Stop>
Rk45Status<N> rk45_integrate(const F& f, double t0, double t1, State<N> y0, double tol,
                             long max_steps, Stop&& stop,
                             double h_max = std::numeric_limits<double>::infinity()) {
  using namespace rk45_detail;
  Rk45Status<N> st;
  st.t = t0;
  st.y = y0;
  double span = t1 - t0;
  if (span == 0.0) return st;
  double dir = span > 0 ? 1.0 : -1.0;
  double len = std::abs(span);
  if (len <= 1e-13 * std::max(1.0, std::abs(t0))) {
    // Span at roundoff scale: one explicit step, error O(len^2).
    State<N> k = f(t0, y0);
    for (int i = 0; i < N; ++i) st.y[i] += span * k[i];
    st.t = t1;
    return st;
  }
  double h = dir * std::min({len, std::max(1e-6, 0.05 * len), h_max});
  State<N> k1 = f(st.t, st.y);
  auto axpy = [](State<N> y, double c, const State<N>& k) {
    for (int i = 0; i < N; ++i) y[i] += c * k[i];
    return y;
  };
  while (dir * (t1 - st.t) > 0) {
    if (st.steps++ >= max_steps)
      throw NumericalError("ode45: step limit exceeded", std::abs(h), st.t);
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(st.t)))
      throw NumericalError("ode45: step size underflow", std::abs(h), st.t);
    if (dir * (st.t + h - t1) > 0) h = t1 - st.t;

    State<N> y2 = axpy(st.y, h * a21, k1);
    State<N> k2 = f(st.t + c2 * h, y2);
    State<N> y3 = st.y;
    for (int i = 0; i < N; ++i) y3[i] += h * (a31 * k1[i] + a32 * k2[i]);
    State<N> k3 = f(st.t + c3 * h, y3);
    State<N> y4 = st.y;
    for (int i = 0; i < N; ++i) y4[i] += h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    State<N> k4 = f(st.t + c4 * h, y4);
    State<N> y5 = st.y;
    for (int i = 0; i < N; ++i)
      y5[i] += h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    State<N> k5 = f(st.t + c5 * h, y5);
    State<N> y6 = st.y;
    for (int i = 0; i < N; ++i)
      y6[i] += h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    State<N> k6 = f(st.t + h, y6);
    State<N> ynew = st.y;
    for (int i = 0; i < N; ++i)
      ynew[i] += h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    State<N> k7 = f(st.t + h, ynew);

    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                      e7 * k7[i]);
      err = std::max(err, std::abs(e));
    }
    double budget = tol * std::abs(h) / len;
    if (err <= budget || std::abs(h) <= 1e-13 * std::max(1.0, std::abs(st.t))) {
      st.t += h;
      st.y = ynew;
      k1 = k7;  // first-same-as-last
      if (stop(st.t, st.y)) {
        st.halted = true;
        return st;
      }
    }
    double fac = err > 0 ? 0.9 * std::pow(budget / err, 0.2) : 5.0;
    fac = std::min(5.0, std::max(0.2, fac));
    h *= fac;
    if (std::abs(h) > h_max) h = dir * h_max;
  }
  return st;
}

template <int N, class F>
Rk45Status<N> rk45_integrate(const F& f, double t0, double t1, State<N> y0, double tol,
                             long max_steps = 1000000) {
  return rk45_integrate<N>(f, t0, t1, y0, tol, max_steps,
                           [](double, const State<N>&) { return false; });
}

}  // namespace qlw
