#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "qlw/analysis.hpp"
#include "qlw/general_reduced.hpp"
#include "qlw/scenario.hpp"

namespace qlw::checks {

// One verification check: a measured quantity (usually a fitted log-log
// slope) against a pinned tolerance, plus the samples that produced it.
struct CheckResult {
  std::string name;
  bool pass = false;
  double slope = std::numeric_limits<double>::quiet_NaN();
  double tolerance = 0.0;
  std::string detail;
  std::vector<std::pair<double, double>> samples;
  double runtime_sec = 0.0;
};

// Reduced-system oracle equivalence: RK4 trajectories against the closed
// forms on s in [0,3], 201 q points, 3000 steps; conservation of mu*U_q.
CheckResult reduced_oracle(const AsymptoticState& state);

// General-system blowup against mu = (s/2 - 1/2)^-1 and s* = 1 (sine-bump
// data, G3 = 4/pi so G3 A_q = 2 at the steepest point).
CheckResult general_blowup();

// Optical function: exactness for r <= t-R, agreement with the full-range
// characteristic oracle, and throughput.
CheckResult optical_exactness(const EikonalSolver& eik, std::uint64_t seed);

// sup_r |nu(t,.)| decay, slope -1 +- 0.15 over t in [50, 5000].
CheckResult nu_decay(const EikonalSolver& eik);
// Refined residual nu + eps G mu U/(4t), slope -2 +- 0.2.
CheckResult refined_nu(const EikonalSolver& eik);

// Eikonal residual along the q=0 curve, slope -2 +- 0.2 on t in [100, 1e4].
CheckResult eikonal_residual_slope(const ProfileEvaluator& prof);

// u_app PDE residual sup_r, slope -3 +- 0.25 (eps = 0.02 evaluator), with
// the Richardson step-halving consistency at t = 1e3.
CheckResult pde_residual_slope(const ProfileEvaluator& prof);

// Backward-solve null test (A == 0): max|v| <= 1e-12 and support
// confinement at every recorded time.  T = 100, h = 0.025.
CheckResult null_solve();

// Support confinement of a generic run.
CheckResult support_confinement(const SolveResult& run, const std::string& label);

// || d v^T || decay over [T_R, T], slope -1/2 +- 0.25.
CheckResult energy_decay(const SolveResult& run, double T_R, double T,
                         double solve_runtime_sec);

// Cauchy property of the T -> infinity limit: compare_vT over
// T1 in {50,100,200} with T2 = 2 T1.
CheckResult cauchy_property(const std::map<double, const SolveResult*>& runs,
                            double total_runtime_sec);

// Scattering identity and its energy companion on u = u_app + v^T.
struct ScatteringPair {
  CheckResult pointwise;
  CheckResult energy;
};
ScatteringPair scattering_identity(const SolveResult& run, double T,
                                   const ProfileEvaluator& prof);

// Grid self-convergence at t = T/2 across three resolutions, order ~ 2,
// plus residual_check h-convergence.
CheckResult self_convergence(const SolveConfig& coarse_cfg, double T);

// Poincare ratios on three canonical test fields: finiteness, exact
// homogeneity, stability under grid halving.
CheckResult poincare(const Scenario& sc);

// Full-range characteristic integration with an independent Fehlberg
// tableau; the verification oracle for solve_q.
double oracle_solve_q(const EikonalSolver& eik, double t, double r, double tol);

void write_report(const std::string& path, const std::vector<CheckResult>& results);

}  // namespace qlw::checks
