#pragma once

#include <string>
#include <vector>

#include "qlw/profile.hpp"

namespace qlw {

// Uniform radial grid r_j = j*h, j = 0..n-1.
struct RadialGrid {
  double h = 0.0;
  int n = 0;
  double r(int j) const { return j * h; }
  double r_max() const { return (n - 1) * h; }
  static RadialGrid make(double r_max, double h);
};

// Fixed-time radial grid function.  Dirichlet zeros are maintained at both
// ends; entries must stay finite.
struct RadialField {
  RadialGrid grid;
  std::vector<double> values;
  double t = 0.0;
};

struct Slice {
  double t = 0.0;
  std::vector<double> v, v_t;
};

struct SolveConfig {
  double T = 100.0;     // chi cutoff scale; data v = 0 for t >= 2T
  double t_min = 1.0;
  double cfl = 0.4;
  double h = 0.025;
  double r_max = 0.0;   // 0 selects 6T + 4R
  Metric metric = Metric::sound_speed(1.0);
  ScatteringData data{ScatteringData::Profile::Bump, 1.0, 1.0};
  EikonalConfig ecfg;
  ProfileConfig pcfg;
  std::vector<double> record_times;  // snapped to the step lattice
};

struct StabilityCertificate {
  bool completed = false;
  double last_stable_t = 0.0;
  double max_abs_v = 0.0;
  std::string abort_reason;  // empty when completed
  std::vector<std::pair<double, double>> history;  // (t, max|v|), subsampled
};

struct SolveResult {
  RadialGrid grid;
  double dt = 0.0;
  std::vector<Slice> slices;
  StabilityCertificate cert;
  // max|v| outside {t-R-2h <= r and r+t <= 6T+2h} relative to max|v|, one
  // entry per recorded slice
  std::vector<double> support_leak_rel;
};

// chi(t/T) source cutoff: 1 for |x| <= 1, 0 for |x| >= 2, even, quintic
// smoothstep in between.
double chi(double x);

// Solves gtilde(u_app+v) dd v = -chi(t/T) gtilde(u_app+v) dd u_app backward
// from v = v_t = 0 at t = 2T, recording slices at the requested times.
// Method of lines: second-order central differences for the radial spatial
// operator, classical RK4 in time; u_app and its derivatives are cached per
// stage time and shared across nodes.
SolveResult backward_solve(const SolveConfig& cfg);

// Evolves a recorded slice forward with the same scheme (time-reversal
// check).
Slice forward_evolve(const SolveConfig& cfg, const Slice& start, double t_end);

// Discrete residual of the full equation on u = u_app + v at a recorded
// slice, max norm over the u_app support band.
double residual_check(const SolveConfig& cfg, const RadialGrid& grid,
                      const Slice& slice);

// Slice persistence: one CSV (r,v,v_t) per recorded time plus a JSON
// manifest {T, epsilon, delta, h, dt, times[]}.
void write_slices(const std::string& dir, const SolveConfig& cfg,
                  const SolveResult& res);
struct LoadedRun {
  SolveResult res;
  double T = 0.0, epsilon = 0.0, delta = 0.0, h = 0.0;
};
LoadedRun load_slices(const std::string& dir);

}  // namespace qlw
