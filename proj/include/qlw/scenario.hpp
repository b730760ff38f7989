#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qlw/analysis.hpp"
#include "qlw/solver.hpp"

namespace qlw {

// Scenario file (TOML): metric, scattering data, asymptotic parameters, grid
// and solver controls, check toggles, output location.  All module
// preconditions are checked eagerly by validate().
struct Scenario {
  // [metric]
  std::string metric_kind = "sound_speed";
  double c_prime0 = 1.0;
  std::vector<double> g_lin;  // 16 entries, row-major, general_linearized only

  // [scattering]
  std::string profile = "bump";
  double amplitude = 1.0;
  double R = 1.0;
  std::string angular = "none";
  double angular_beta = 0.0;

  // [asymptotics]
  double epsilon = 0.05;
  double delta = 0.1;
  double quad_tol = 1e-10;
  double ode_tol = 1e-10;
  Vec3 omega{0.0, 0.0, 1.0};

  // [profile_eval]
  double T_R = 0.0;      // 0 = auto rule
  double fd_step = 0.25;

  // [solver]
  std::vector<double> T_list{100.0};
  double t_min = 0.0;    // 0 = auto (T_R)
  double h = 0.025;      // default R/40
  double cfl = 0.4;
  double r_max = 0.0;    // 0 = auto (6 max T + 4R)
  double record_ratio = 1.1892071150027210667;  // 2^(1/4)

  // [energy]
  double c0 = 20.0;

  // [checks] name -> enabled; [tolerances] name -> override
  std::map<std::string, bool> checks;
  std::map<std::string, double> tolerances;

  // [output]
  std::string out_dir = "out";
  std::uint64_t seed = 12345;
  int threads = 1;
};

Scenario load_scenario(const std::string& path);

// Throws ConfigError with a field-level message on the first violated
// constraint; returns the list of applied defaults otherwise.
std::vector<std::string> validate_scenario(const Scenario& sc);

// Effective (defaults-resolved) values.
double resolved_T_R(const Scenario& sc);
double resolved_t_min(const Scenario& sc);
double resolved_r_max(const Scenario& sc);

Metric make_metric(const Scenario& sc);
ScatteringData make_data(const Scenario& sc);
EikonalConfig make_eikonal_config(const Scenario& sc);
ProfileConfig make_profile_config(const Scenario& sc);
SolveConfig make_solve_config(const Scenario& sc, double T);
EnergyConfig make_energy_config(const Scenario& sc);

// Geometric record times with the scenario ratio between T_R and 2T.
std::vector<double> record_times(const Scenario& sc, double T);

// Normalized one-line-per-field echo used by `validate`.
std::string describe(const Scenario& sc);

}  // namespace qlw
