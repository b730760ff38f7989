// Acceptance suite: runs every verification criterion at its pinned
// tolerance and prints one PASS/FAIL line per criterion.  Exit code 0 iff
// everything passes.

#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "qlw/checks.hpp"

using namespace qlw;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double sec() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

constexpr double kFamilyH = 0.05;  // grid for the T-sweep solver runs

SolveConfig family_config(double T) {
  SolveConfig c;
  c.T = T;
  c.h = kFamilyH;
  c.cfl = 0.4;
  c.metric = Metric::sound_speed(1.0);
  c.data = ScatteringData(ScatteringData::Profile::Bump, 1.0, 1.0);
  c.ecfg.epsilon = 0.05;
  c.ecfg.delta = 0.1;
  c.pcfg.T_R = ProfileEvaluator::default_T_R(0.05, 0.1, 1.0);
  c.t_min = c.pcfg.T_R;
  double t = c.pcfg.T_R;
  while (t < 2.0 * T - 1e-9) {
    c.record_times.push_back(t);
    t *= std::pow(2.0, 0.25);
  }
  c.record_times.push_back(0.5 * T);
  c.record_times.push_back(T);
  c.record_times.push_back(2.0 * T);
  return c;
}

}  // namespace

int main() {
  std::vector<checks::CheckResult> all;
  bool ok = true;
  auto report = [&](int num, const checks::CheckResult& r) {
    std::printf("criterion %2d  %-24s %s  slope=%-11.4g tol=%-9.3g [%.1f s] %s\n", num,
                r.name.c_str(), r.pass ? "PASS" : "FAIL", r.slope, r.tolerance,
                r.runtime_sec, r.detail.c_str());
    std::fflush(stdout);
    all.push_back(r);
    ok = ok && r.pass;
  };

  Metric metric = Metric::sound_speed(1.0);
  ScatteringData data(ScatteringData::Profile::Bump, 1.0, 1.0);
  EikonalConfig ecfg;
  ecfg.epsilon = 0.05;
  ecfg.delta = 0.1;
  ecfg.ode_tol = 1e-12;
  AsymptoticState state(data, metric, ecfg.omega, 1e-12);
  EikonalSolver eik(ecfg, metric, data);
  ProfileEvaluator prof(metric, data, ecfg, ProfileConfig{});
  EikonalConfig ecfg02 = ecfg;
  ecfg02.epsilon = 0.02;
  ProfileEvaluator prof02(metric, data, ecfg02, ProfileConfig{});

  report(1, checks::reduced_oracle(state));
  report(2, checks::general_blowup());
  report(3, checks::optical_exactness(eik, 12345));
  report(4, checks::nu_decay(eik));
  report(4, checks::refined_nu(eik));
  report(5, checks::eikonal_residual_slope(prof));
  report(6, checks::pde_residual_slope(prof02));
  report(7, checks::null_solve());

  // Solver family for the T -> infinity criteria.
  std::map<double, SolveResult> runs;
  std::map<double, double> run_time;
  double total_time = 0.0;
  for (double T : {50.0, 100.0, 200.0, 400.0}) {
    Timer timer;
    runs[T] = backward_solve(family_config(T));
    run_time[T] = timer.sec();
    total_time += run_time[T];
    std::printf("  solve T=%-4g done in %.1f s (max|v| = %.3e, support leak = %.2e)\n",
                T, run_time[T], runs[T].cert.max_abs_v,
                *std::max_element(runs[T].support_leak_rel.begin(),
                                  runs[T].support_leak_rel.end()));
    std::fflush(stdout);
  }

  double T_R = ProfileEvaluator::default_T_R(0.05, 0.1, 1.0);
  report(8, checks::energy_decay(runs[200.0], T_R, 200.0, run_time[200.0]));

  std::map<double, const SolveResult*> ptrs;
  for (auto& [T, r] : runs) ptrs[T] = &r;
  report(9, checks::cauchy_property(ptrs, total_time));

  checks::ScatteringPair pair = checks::scattering_identity(runs[200.0], 200.0, prof);
  report(10, pair.pointwise);
  report(10, pair.energy);

  report(11, checks::self_convergence(family_config(50.0), 50.0));
  report(12, checks::poincare(Scenario{}));

  checks::write_report("acceptance_report.json", all);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
