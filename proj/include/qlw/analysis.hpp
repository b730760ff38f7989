#pragma once

#include <utility>
#include <vector>

#include "qlw/solver.hpp"

namespace qlw {

struct EnergyConfig {
  double c0 = 20.0;   // ghost-weight strength
  double epsilon = 0.05;
  double delta = 0.1;
  double R = 1.0;
};

// Least-squares line through (ln t, ln value).
struct DecayFit {
  std::vector<std::pair<double, double>> samples;
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  // max |ln v - fit| over the samples
};

DecayFit fit_decay(const std::vector<std::pair<double, double>>& samples);

// Ghost weight w = exp(c0 eps ln t sigma(q)), sigma(q) = (R+q+1)^{-1/16};
// w = 1 where r < t - R (phi must vanish there, asserted to 1e-10).
double ghost_weight(const EnergyConfig& ecfg, double t, double q);

// E = 4 pi int w (phi_t^2 + c(u)^2 phi_r^2) r^2 dr by the trapezoid rule.
// Slices must share one grid and time stamp.
double weighted_energy(const EnergyConfig& ecfg, const Metric& metric,
                       const EikonalSolver& eik, const RadialField& u_slice,
                       const RadialField& phi, const RadialField& phi_t);

// LHS/RHS of int <t-r>^-2 phi^2 dx <= C int |d phi|^2 dx, with the radial
// derivative standing in for the full gradient.
double poincare_flat(const RadialField& phi, double t);

// LHS/RHS of int phi^2 q_r^2 <q>^-2 w dx <= C int |d phi|^2 w dx.
double poincare_weighted(const EnergyConfig& ecfg, const EikonalSolver& eik,
                         const RadialField& phi, double t);

// Flat L2 norm of the spacetime gradient of a (v, v_t) slice:
// sqrt(4 pi int (v_t^2 + v_r^2) r^2 dr), v_r by central differences.
double grad_l2(const RadialGrid& grid, const Slice& s, double r_cap = -1.0);

// sup over the common record times of || d(v_T2 - v_T1) ||_L2.  Both runs
// must share the grid and the compared times.
double compare_vT(const SolveResult& run1, const SolveResult& run2,
                  const std::vector<double>& common_times);

std::vector<double> common_record_times(const SolveResult& run1,
                                        const SolveResult& run2, double tol);

struct ScatteringCheckResult {
  DecayFit pointwise;  // sup_{|q|<=R} |(d_t-d_r)u + 2 eps A / r| vs t
  DecayFit energy;     // || d(u - eps U / r) ||_{L2(r <= 5t/4)} vs t
};

// Theorem-style scattering verification on u = u_app + v^T, using slices
// with t <= T/2.
ScatteringCheckResult scattering_check(const SolveResult& run, double T,
                                       const ProfileEvaluator& prof);

// || d v ||_L2 per recorded slice with t in [t_lo, t_hi]; input for the
// energy-decay fit.
std::vector<std::pair<double, double>> energy_decay_samples(const SolveResult& run,
                                                            double t_lo, double t_hi);

}  // namespace qlw
