#pragma once

#include "qlw/eikonal.hpp"

namespace qlw {

struct ProfileConfig {
  double T_R = 0.0;      // cutoff onset; 0 selects the default rule
  double fd_step = 0.25; // relative step for FD second derivatives
};

// Evaluates the asymptotic profile U(t,r), the localized approximate
// solution
//   u_app = eps r^-1 eta(t) psi(r/t) U(s, q(t,r)),  s = eps ln t - delta,
// and the residuals it is supposed to make small: the eikonal residual
// gtilde(eps U/r) q_a q_b, the PDE residual gtilde(u_app) dd u_app, and the
// scattering identity (d_t - d_r) u_app + 2 eps r^-1 psi A.
//
// The cutoffs are C^4 polynomial smoothsteps, so second-derivative stencils
// applied across the junctions keep a clean O(h^2) truncation.
class ProfileEvaluator {
 public:
  ProfileEvaluator(const Metric& metric, ScatteringData data, EikonalConfig ecfg,
                   ProfileConfig pcfg = {});

  static constexpr double psi_band[4] = {0.5, 0.75, 1.25, 1.5};
  static double psi(double x);
  static double psi_d1(double x);
  static double psi_d2(double x);
  double eta(double t) const;
  double eta_d1(double t) const;

  double eval_U(double t, double r) const;
  double eval_u_app(double t, double r) const;

  struct Derivs {
    double u = 0.0, u_t = 0.0, u_r = 0.0;
  };
  Derivs u_app_derivs(double t, double r) const;

  // (d_t - d_r) u_app assembled with q_t - q_r = mu exactly.
  double du_app_minus(double t, double r) const;

  double scattering_identity_residual(double t, double r) const;
  double eikonal_residual(double t, double r) const;
  double pde_residual(double t, double r) const;

  // Pieces of one eikonal/profile evaluation, for callers that batch the
  // expensive parts themselves (the backward solver's level cache).
  struct PointEval {
    double q = 0.0, nu = 0.0, mu = 0.0, U = 0.0, Uq = 0.0, Us = 0.0;
  };
  Derivs u_app_derivs_from(double t, double r, const PointEval& p) const;

  // U(s(t), R) and its s-derivative: the profile is constant in q past the
  // band, so these determine u_app wherever q >= R.
  double outer_U(double t) const;
  double outer_Us(double t) const;
  Derivs u_app_derivs_outer(double t, double r, double Ub, double Ubs) const;

  double T_R() const { return T_R_; }
  double fd_step() const { return fd_step_; }
  double epsilon() const { return eik_.config().epsilon; }
  const EikonalSolver& eikonal() const { return eik_; }
  const AsymptoticState& state() const { return eik_.state(); }
  const Metric& metric() const { return metric_; }

  static double default_T_R(double epsilon, double delta, double R);

 private:
  Metric metric_;
  EikonalSolver eik_;
  double T_R_;
  double fd_step_;
};

}  // namespace qlw
