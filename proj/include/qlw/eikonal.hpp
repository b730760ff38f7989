#pragma once

#include <limits>

#include "qlw/reduced.hpp"

namespace qlw {

// One spacetime sample of the approximate optical function and its
// derivatives.  q_t = (mu+nu)/2 and q_r = (nu-mu)/2 hold exactly.
struct OpticalSample {
  double q = 0.0;
  double nu = 0.0;       // q_t + q_r
  double mu = 0.0;       // q_t - q_r
  double q_t = 0.0;
  double q_r = 0.0;
  Vec3 lambda{};         // tangential gradient, zero for omega-independent data
  double t0 = std::numeric_limits<double>::infinity();  // exit time of the band
  double t1 = 0.0;       // entry time, (t+r+R)/2 exactly
};

struct EikonalConfig {
  double epsilon = 0.05;
  double delta = 0.1;
  double ode_tol = 1e-10;
  long max_steps = 1000000;
  Vec3 omega{0.0, 0.0, 1.0};
};

// Solves q_t - q_r = mu(eps ln t - delta, q) with q(t,0) = -t by integrating
// along the characteristic tau -> (tau, r+t-tau).  The segment before the
// support band (q <= -R) is exactly linear, so the integration starts at
// tau = t1 with q = -R; the segment after the band (q >= R) is again exactly
// linear and is finished in closed form.
class EikonalSolver {
 public:
  EikonalSolver(EikonalConfig cfg, const Metric& metric, ScatteringData data);

  double slow_time(double t) const;  // s = eps ln t - delta

  // Joint (q, nu) solve; lambda is filled only for omega-dependent data.
  OpticalSample sample(double t, double r) const;

  double solve_q(double t, double r) const;
  double solve_nu(double t, double r) const;

  // nu + eps G mu U / (4t); the transport correction captures the leading
  // term of nu.
  double refined_nu_residual(double t, double r) const;

  // lambda_i = (d_i - omega_i d_r) q by geodesic central differences of
  // solve_q over perturbed angles, projected tangentially.
  Vec3 lambda_fd(double t, double r, double step = 1e-4) const;

  // Radius r with q(t,r) = q_target (monotone in r); bisection + secant to
  // 1e-10 in q.
  double invert_q(double t, double q_target) const;

  // Radius of the q = R level at time t, found from one characteristic
  // integration.  Beyond it U(s,q) is constant in q.
  double band_outer_radius(double t) const;

  const EikonalConfig& config() const { return cfg_; }
  const AsymptoticState& state() const { return state_; }
  const Metric& metric() const { return metric_; }

 private:
  struct CharResult {
    double q, nu;
  };
  CharResult integrate_char(double t, double r, const AsymptoticState& st,
                            bool want_nu) const;

  EikonalConfig cfg_;
  Metric metric_;
  ScatteringData data_;
  AsymptoticState state_;  // at cfg_.omega
};

}  // namespace qlw
