#include "qlw/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>

#include "nlohmann/json.hpp"

namespace qlw::checks {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double sec() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::vector<double> geometric_times(double lo, double hi, double ratio) {
  std::vector<double> out;
  for (double t = lo; t < hi - 1e-9; t *= ratio) out.push_back(t);
  out.push_back(hi);
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return out;
}

}  // namespace

double oracle_solve_q(const EikonalSolver& eik, double t, double r, double tol) {
  // Fehlberg 4(5) from the characteristic foot (tau, z) = (r+t, -(r+t));
  // independent of the production path, which starts at the band entry.
  const AsymptoticState& st = eik.state();
  const double eps = eik.config().epsilon, delta = eik.config().delta;
  const double G = st.G();
  auto f = [&](double tau, double z) {
    return -2.0 * std::exp(0.5 * G * st.A(z) * (eps * std::log(tau) - delta));
  };
  const double R = st.R();
  double tau = r + t, z = -(r + t);
  double len = std::max(r, 1e-12);
  double h = -std::min(0.1, 0.05 * len);
  // Far below the band the field is exactly constant; the step cap keeps a
  // growing step from leaping across the band unnoticed.
  auto cap = [&](double hh) {
    double allowed = std::max(0.25 * R, 0.4 * (-R - z));
    return std::max(hh, -allowed);
  };
  while (tau > t) {
    h = cap(h);
    if (tau + h < t) h = t - tau;
    double k1 = f(tau, z);
    double k2 = f(tau + 0.25 * h, z + 0.25 * h * k1);
    double k3 = f(tau + 0.375 * h, z + h * (3.0 * k1 + 9.0 * k2) / 32.0);
    double k4 = f(tau + 12.0 / 13.0 * h,
                  z + h * (1932.0 * k1 - 7200.0 * k2 + 7296.0 * k3) / 2197.0);
    double k5 = f(tau + h, z + h * (439.0 / 216.0 * k1 - 8.0 * k2 +
                                    3680.0 / 513.0 * k3 - 845.0 / 4104.0 * k4));
    double k6 = f(tau + 0.5 * h,
                  z + h * (-8.0 / 27.0 * k1 + 2.0 * k2 - 3544.0 / 2565.0 * k3 +
                           1859.0 / 4104.0 * k4 - 11.0 / 40.0 * k5));
    double z5 = z + h * (16.0 / 135.0 * k1 + 6656.0 / 12825.0 * k3 +
                         28561.0 / 56430.0 * k4 - 9.0 / 50.0 * k5 + 2.0 / 55.0 * k6);
    double z4 = z + h * (25.0 / 216.0 * k1 + 1408.0 / 2565.0 * k3 +
                         2197.0 / 4104.0 * k4 - 0.2 * k5);
    double err = std::abs(z5 - z4);
    double budget = tol * std::abs(h) / len;
    if (err <= budget) {
      tau += h;
      z = z5;
    }
    double fac = err > 0 ? 0.9 * std::pow(budget / err, 0.2) : 4.0;
    h *= std::min(4.0, std::max(0.2, fac));
    if (std::abs(h) < 1e-15 * std::max(1.0, tau))
      throw NumericalError("oracle_solve_q: step underflow", std::abs(h), tau);
  }
  return z;
}

CheckResult reduced_oracle(const AsymptoticState& state) {
  Timer timer;
  CheckResult res;
  res.name = "reduced_oracle";
  res.tolerance = 1e-8;

  const double R = state.R();
  std::vector<double> q_grid(201);
  for (int j = 0; j < 201; ++j) q_grid[j] = -R - 1.0 + (2.0 * R + 2.0) * j / 200.0;
  ReducedTrajectories tr = integrate_reduced_ode(state, 3.0, 3000, q_grid);

  double err = 0.0, cons = 0.0;
  for (std::size_t i = 0; i < tr.s.size(); i += 10) {
    for (std::size_t j = 0; j < q_grid.size(); ++j) {
      double s = tr.s[i], q = q_grid[j];
      err = std::max(err, std::abs(tr.at_mu(i, j) - state.mu(s, q)));
      err = std::max(err, std::abs(tr.at_uq(i, j) - state.Uq(s, q)));
      cons = std::max(cons,
                      std::abs(tr.at_mu(i, j) * tr.at_uq(i, j) + 2.0 * state.A(q)));
    }
  }
  res.runtime_sec = timer.sec();
  res.slope = err;
  res.pass = err <= 1e-8 && cons <= 1e-10 && res.runtime_sec < 1.0;
  res.detail = "max|num-closed| = " + std::to_string(err) +
               ", max|mu Uq + 2A| = " + std::to_string(cons);
  return res;
}

CheckResult general_blowup() {
  Timer timer;
  CheckResult res;
  res.name = "general_blowup";
  res.tolerance = 1e-6;

  // Sine-bump data: A_q(-1/2) = pi/2, so G3 = 4/pi puts G3 A_q = 2 at the
  // steepest point and the exact pointwise solution is mu = 2/(s-1).
  ScatteringData data(ScatteringData::Profile::SineBump, 1.0, 1.0);
  Metric metric = Metric::sound_speed(1.0);
  AsymptoticState asym(data, metric, {0.0, 0.0, 1.0});
  GeneralReducedModel model;
  model.G3 = 4.0 / M_PI;

  const int n_q = 1601;
  GeneralReducedState state(model, asym, n_q);
  std::vector<double> s_rec;
  for (int k = 1; k <= 9; ++k) s_rec.push_back(0.1 * k);
  GeneralRunResult run = integrate_general_reduced(state, 1.2, 2.5e-4, s_rec, 1e6);

  const int j_star = 600;  // q = -1/2 on the 1601-point grid over [-2,2]
  double err = 0.0;
  for (const GeneralSnapshot& snap : run.snapshots) {
    double exact = 2.0 / (snap.s - 1.0);
    err = std::max(err, std::abs(snap.mu[j_star] - exact));
  }
  res.runtime_sec = timer.sec();
  res.slope = run.report.s_last_stable;
  bool s_ok = run.report.blew_up && std::abs(run.report.s_last_stable - 1.0) <= 0.05;
  res.pass = err <= 1e-6 && s_ok && res.runtime_sec < 5.0;
  res.detail = "max|mu - 2/(s-1)| = " + std::to_string(err) +
               ", s_blowup = " + std::to_string(run.report.s_last_stable);
  return res;
}

CheckResult optical_exactness(const EikonalSolver& eik, std::uint64_t seed) {
  Timer timer;
  CheckResult res;
  res.name = "optical_exactness";
  res.tolerance = 1e-9;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double R = eik.state().R();

  double exact_err = 0.0;
  for (int i = 0; i < 2000; ++i) {
    double t = 2.0 * std::pow(5000.0, uni(rng));
    double r = (t - R) * uni(rng);
    if (r < 0.0) continue;
    double q = eik.solve_q(t, r);
    exact_err = std::max(exact_err, std::abs(q - (r - t)) / (t + r));
  }

  double oracle_err = 0.0;
  for (int i = 0; i < 300; ++i) {
    double t = 5.0 * std::pow(400.0, uni(rng));
    double r = i % 3 == 2 ? t * (1.0 + 0.4 * uni(rng))
                          : std::max(0.0, t + (-R - 2.0 + (5.0 * R) * uni(rng)));
    double q = eik.solve_q(t, r);
    double qo = oracle_solve_q(eik, t, r, 1e-13);
    oracle_err = std::max(oracle_err, std::abs(q - qo));
  }

  Timer sample_timer;
  volatile double sink = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double t = 5.0 * std::pow(400.0, uni(rng));
    double r = t + (-R - 2.0 + (5.0 * R) * uni(rng));
    sink = eik.solve_q(t, std::max(0.0, r));
  }
  (void)sink;
  double per_1e4 = sample_timer.sec();

  res.runtime_sec = timer.sec();
  res.slope = oracle_err;
  res.pass = exact_err <= 1e-12 && oracle_err <= 1e-9 && per_1e4 < 1.0;
  res.detail = "exact-region err = " + std::to_string(exact_err) +
               ", oracle err = " + std::to_string(oracle_err) + ", 1e4 samples in " +
               std::to_string(per_1e4) + " s";
  return res;
}

namespace {

// sup over the radiation band of a pointwise quantity, sampled at fixed
// q levels plus a short tail past the band.
template <class F>
double band_sup(const EikonalSolver& eik, double t, int n_levels, bool tail, F&& f) {
  const double R = eik.state().R();
  double sup = 0.0;
  for (int k = 0; k < n_levels; ++k) {
    double q = -R + 2.0 * R * k / (n_levels - 1);
    double r = eik.invert_q(t, q);
    sup = std::max(sup, std::abs(f(t, r)));
  }
  if (tail) {
    double r_band = eik.invert_q(t, R);
    for (double off : {0.5 * R, R, 2.0 * R, 4.0 * R})
      sup = std::max(sup, std::abs(f(t, r_band + off)));
  }
  return sup;
}

}  // namespace

CheckResult nu_decay(const EikonalSolver& eik) {
  Timer timer;
  CheckResult res;
  res.name = "nu_decay";
  res.tolerance = 0.15;
  std::vector<std::pair<double, double>> samples;
  for (double t : log_spaced(50.0, 5000.0, 12)) {
    double sup = band_sup(eik, t, 41, true,
                          [&](double tt, double rr) { return eik.solve_nu(tt, rr); });
    samples.emplace_back(t, sup);
  }
  DecayFit fit = fit_decay(samples);
  res.samples = samples;
  res.slope = fit.slope;
  res.runtime_sec = timer.sec();
  res.pass = std::abs(fit.slope + 1.0) <= res.tolerance;
  res.detail = "sup_r |nu| ~ t^" + std::to_string(fit.slope);
  return res;
}

CheckResult refined_nu(const EikonalSolver& eik) {
  Timer timer;
  CheckResult res;
  res.name = "refined_nu";
  res.tolerance = 0.2;
  std::vector<std::pair<double, double>> samples;
  for (double t : log_spaced(50.0, 5000.0, 12)) {
    double sup = band_sup(eik, t, 41, false, [&](double tt, double rr) {
      return eik.refined_nu_residual(tt, rr);
    });
    samples.emplace_back(t, sup);
  }
  DecayFit fit = fit_decay(samples);
  res.samples = samples;
  res.slope = fit.slope;
  res.runtime_sec = timer.sec();
  res.pass = std::abs(fit.slope + 2.0) <= res.tolerance;
  res.detail = "sup_band |nu + eps G mu U/(4t)| ~ t^" + std::to_string(fit.slope);
  return res;
}

CheckResult eikonal_residual_slope(const ProfileEvaluator& prof) {
  Timer timer;
  CheckResult res;
  res.name = "eikonal_residual";
  res.tolerance = 0.2;
  const EikonalSolver& eik = prof.eikonal();
  std::vector<std::pair<double, double>> samples;
  for (double t : log_spaced(100.0, 1e4, 12)) {
    double r = eik.invert_q(t, 0.0);
    samples.emplace_back(t, std::abs(prof.eikonal_residual(t, r)));
  }
  DecayFit fit = fit_decay(samples);
  res.samples = samples;
  res.slope = fit.slope;
  res.runtime_sec = timer.sec();
  res.pass = std::abs(fit.slope + 2.0) <= res.tolerance;
  res.detail = "|gtilde dq dq| at q=0 ~ t^" + std::to_string(fit.slope);
  return res;
}

namespace {

double pde_residual_sup(const ProfileEvaluator& prof, double t) {
  const EikonalSolver& eik = prof.eikonal();
  const double R = prof.state().R();
  double sup = 0.0;
  for (int k = 0; k < 25; ++k) {
    double q = -0.9 * R + 1.8 * R * k / 24.0;
    double r = eik.invert_q(t, q);
    sup = std::max(sup, std::abs(prof.pde_residual(t, r)));
  }
  for (double x : {1.02, 1.05, 1.1, 1.15, 1.2, 1.26, 1.3, 1.35, 1.4, 1.45, 1.48})
    sup = std::max(sup, std::abs(prof.pde_residual(t, x * t)));
  return sup;
}

}  // namespace

CheckResult pde_residual_slope(const ProfileEvaluator& prof) {
  Timer timer;
  CheckResult res;
  res.name = "pde_residual";
  res.tolerance = 0.25;
  std::vector<std::pair<double, double>> samples;
  for (double t : log_spaced(100.0, 1e4, 12))
    samples.emplace_back(t, pde_residual_sup(prof, t));
  DecayFit fit = fit_decay(samples);

  // Richardson self-consistency at t = 1e3: halve the FD step.
  ProfileConfig halved;
  halved.T_R = prof.T_R();
  halved.fd_step = prof.fd_step() / 2.0;
  ProfileEvaluator prof2(prof.metric(), prof.state().data(), prof.eikonal().config(),
                         halved);
  double a = pde_residual_sup(prof, 1e3);
  double b = pde_residual_sup(prof2, 1e3);
  double rel = std::abs(a - b) / std::max(std::abs(b), 1e-300);

  res.samples = samples;
  res.slope = fit.slope;
  res.runtime_sec = timer.sec();
  res.pass = std::abs(fit.slope + 3.0) <= res.tolerance && rel < 0.01;
  res.detail = "sup_r |gtilde dd u_app| ~ t^" + std::to_string(fit.slope) +
               ", fd halving rel change = " + std::to_string(rel);
  return res;
}

CheckResult null_solve() {
  Timer timer;
  CheckResult res;
  res.name = "null_solve";
  res.tolerance = 1e-12;

  SolveConfig cfg;
  cfg.T = 100.0;
  cfg.h = 0.025;
  cfg.cfl = 0.4;
  cfg.metric = Metric::sound_speed(1.0);
  cfg.data = ScatteringData(ScatteringData::Profile::Bump, 0.0, 1.0);
  cfg.ecfg.epsilon = 0.05;
  cfg.ecfg.delta = 0.1;
  cfg.pcfg.T_R = ProfileEvaluator::default_T_R(0.05, 0.1, 1.0);
  cfg.t_min = cfg.pcfg.T_R;
  cfg.record_times = geometric_times(cfg.pcfg.T_R, 2.0 * cfg.T, std::pow(2.0, 0.25));

  SolveResult run = backward_solve(cfg);
  double leak = 0.0;
  for (double l : run.support_leak_rel) leak = std::max(leak, l);
  res.runtime_sec = timer.sec();
  res.slope = run.cert.max_abs_v;
  res.pass = run.cert.completed && run.cert.max_abs_v <= 1e-12 && leak <= 1e-8 &&
             res.runtime_sec < 120.0;
  res.detail = "max|v| = " + std::to_string(run.cert.max_abs_v) +
               ", support leak = " + std::to_string(leak);
  return res;
}

CheckResult support_confinement(const SolveResult& run, const std::string& label) {
  CheckResult res;
  res.name = "support_confinement_" + label;
  res.tolerance = 1e-8;
  double leak = 0.0;
  for (double l : run.support_leak_rel) leak = std::max(leak, l);
  res.slope = leak;
  res.pass = leak <= 1e-8;
  res.detail = "max relative |v| outside [t-R-2h, 6T-t+2h]";
  return res;
}

CheckResult energy_decay(const SolveResult& run, double T_R, double T,
                         double solve_runtime_sec) {
  CheckResult res;
  res.name = "energy_decay";
  res.tolerance = 0.25;
  auto samples = energy_decay_samples(run, T_R, T);
  if (samples.size() < 4) {
    res.detail = "not enough recorded slices in [T_R, T]";
    return res;
  }
  DecayFit fit = fit_decay(samples);
  res.samples = samples;
  res.slope = fit.slope;
  res.runtime_sec = solve_runtime_sec;
  res.pass = std::abs(fit.slope + 0.5) <= res.tolerance && solve_runtime_sec < 300.0;
  res.detail = "||d v^T|| ~ t^" + std::to_string(fit.slope);
  return res;
}

CheckResult cauchy_property(const std::map<double, const SolveResult*>& runs,
                            double total_runtime_sec) {
  CheckResult res;
  res.name = "cauchy";
  res.tolerance = 0.25;
  std::vector<std::pair<double, double>> vals;
  for (double T1 : {50.0, 100.0, 200.0}) {
    auto it1 = runs.find(T1);
    auto it2 = runs.find(2.0 * T1);
    if (it1 == runs.end() || it2 == runs.end()) {
      res.detail = "missing runs for T1 = " + std::to_string(T1);
      return res;
    }
    auto common = common_record_times(*it1->second, *it2->second,
                                      0.5 * it1->second->dt);
    vals.emplace_back(T1, compare_vT(*it1->second, *it2->second, common));
  }
  bool monotone = true;
  int inversions = 0;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (vals[i].second > vals[i - 1].second) {
      ++inversions;
      if (vals[i].second > 1.05 * vals[i - 1].second) monotone = false;
    }
  }
  if (inversions > 1) monotone = false;

  // Three T1 values: least squares done directly.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [T1, d] : vals) {
    double x = std::log(T1), y = std::log(d);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double slope = (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx);

  res.samples = vals;
  res.slope = slope;
  res.runtime_sec = total_runtime_sec;
  res.pass = monotone && std::abs(slope + 0.5) <= res.tolerance &&
             total_runtime_sec < 900.0;
  res.detail = "sup_t ||d(v_2T - v_T)|| ~ T^" + std::to_string(slope) +
               (monotone ? ", monotone" : ", NOT monotone");
  return res;
}

ScatteringPair scattering_identity(const SolveResult& run, double T,
                                   const ProfileEvaluator& prof) {
  Timer timer;
  ScatteringPair pair;
  ScatteringCheckResult sc = scattering_check(run, T, prof);

  pair.pointwise.name = "scattering_pointwise";
  pair.pointwise.tolerance = 0.3;
  pair.pointwise.samples = sc.pointwise.samples;
  if (sc.pointwise.samples.size() >= 4) {
    pair.pointwise.slope = sc.pointwise.slope;
    pair.pointwise.pass = std::abs(sc.pointwise.slope + 1.5) <= 0.3;
  }
  pair.pointwise.detail =
      "sup_band |(dt-dr)u + 2 eps A/r| ~ t^" + std::to_string(sc.pointwise.slope);

  pair.energy.name = "scattering_energy";
  pair.energy.tolerance = 0.25;
  pair.energy.samples = sc.energy.samples;
  if (sc.energy.samples.size() >= 4) {
    pair.energy.slope = sc.energy.slope;
    pair.energy.pass = std::abs(sc.energy.slope + 0.5) <= 0.25;
  }
  pair.energy.detail =
      "||d(u - eps U/r)||_{r<=5t/4} ~ t^" + std::to_string(sc.energy.slope);
  pair.pointwise.runtime_sec = timer.sec();
  return pair;
}

CheckResult self_convergence(const SolveConfig& coarse_cfg, double T) {
  Timer timer;
  CheckResult res;
  res.name = "self_convergence";
  res.tolerance = 0.0;

  SolveConfig cfgs[3] = {coarse_cfg, coarse_cfg, coarse_cfg};
  cfgs[1].h /= 2.0;
  cfgs[2].h /= 4.0;
  double t_half = 0.5 * T;
  SolveResult runs[3];
  double rc[3];
  for (int k = 0; k < 3; ++k) {
    cfgs[k].record_times = {t_half};
    runs[k] = backward_solve(cfgs[k]);
    if (!runs[k].cert.completed || runs[k].slices.empty()) {
      res.detail = "run at h = " + std::to_string(cfgs[k].h) + " did not complete";
      return res;
    }
    rc[k] = residual_check(cfgs[k], runs[k].grid, runs[k].slices.front());
  }

  auto diff_l2 = [&](const SolveResult& a, const SolveResult& b) {
    // b is the finer run; coarse node j coincides with fine node 2j.
    double acc = 0.0;
    for (int j = 0; j < a.grid.n; ++j) {
      double d = a.slices[0].v[j] - b.slices[0].v[2 * j];
      acc += d * d * a.grid.r(j) * a.grid.r(j);
    }
    return std::sqrt(4.0 * M_PI * acc * a.grid.h);
  };
  double e1 = diff_l2(runs[0], runs[1]);
  double e2 = diff_l2(runs[1], runs[2]);
  double factor = e1 / std::max(e2, 1e-300);
  double order = std::log2(std::max(factor, 1e-300));
  double rfac1 = rc[0] / std::max(rc[1], 1e-300);
  double rfac2 = rc[1] / std::max(rc[2], 1e-300);

  res.slope = factor;
  res.runtime_sec = timer.sec();
  // The residual-check factor is asserted on the finer pair, where the
  // narrow support-edge structure of the data is resolved by the grid.
  res.pass = factor >= 3.0 && factor <= 5.0 && rfac2 >= 3.0 && rfac2 <= 5.0;
  res.detail = "slice diff factor = " + std::to_string(factor) + " (order " +
               std::to_string(order) + "), residual factors = " +
               std::to_string(rfac1) + ", " + std::to_string(rfac2);
  return res;
}

CheckResult poincare(const Scenario& sc) {
  Timer timer;
  CheckResult res;
  res.name = "poincare";
  res.tolerance = 0.10;

  Metric metric = make_metric(sc);
  ScatteringData data = make_data(sc);
  EikonalSolver eik(make_eikonal_config(sc), metric, data);
  EnergyConfig ecfg = make_energy_config(sc);
  const double t = 100.0;

  struct Field {
    double center, width;
  };
  Field fields[3] = {{t, 1.0}, {t + 3.0, 2.0}, {t + 1.5, 2.5}};

  auto make_field = [&](const Field& f, double h) {
    RadialField phi;
    phi.grid = RadialGrid::make(t + 30.0, h);
    phi.t = t;
    phi.values.resize(phi.grid.n, 0.0);
    for (int j = 0; j < phi.grid.n; ++j) {
      double x = (phi.grid.r(j) - f.center) / f.width;
      if (std::abs(x) < 1.0) {
        double w = 1.0 - x * x;
        phi.values[j] = w * w * w;
      }
    }
    return phi;
  };

  bool ok = true;
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    RadialField phi = make_field(fields[k], 0.05);
    RadialField phi_half = make_field(fields[k], 0.025);
    double flat = poincare_flat(phi, t);
    double wgt = poincare_weighted(ecfg, eik, phi, t);
    double flat_h = poincare_flat(phi_half, t);
    double wgt_h = poincare_weighted(ecfg, eik, phi_half, t);

    RadialField phi2 = phi;
    for (double& v : phi2.values) v *= 2.0;
    bool homog = poincare_flat(phi2, t) == flat &&
                 poincare_weighted(ecfg, eik, phi2, t) == wgt;
    bool finite = std::isfinite(flat) && std::isfinite(wgt);
    bool stable = std::abs(flat - flat_h) <= 0.10 * std::abs(flat_h) &&
                  std::abs(wgt - wgt_h) <= 0.10 * std::abs(wgt_h);
    ok = ok && homog && finite && stable;
    detail += (k ? "; " : "") + std::string("field ") + std::to_string(k) +
              ": flat = " + std::to_string(flat) + ", weighted = " +
              std::to_string(wgt);
  }
  res.runtime_sec = timer.sec();
  res.pass = ok;
  res.detail = detail;
  return res;
}

void write_report(const std::string& path, const std::vector<CheckResult>& results) {
  nlohmann::json rep = nlohmann::json::array();
  for (const CheckResult& r : results) {
    nlohmann::json j;
    j["name"] = r.name;
    j["slope"] = std::isfinite(r.slope) ? r.slope : 0.0;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    j["runtime_sec"] = r.runtime_sec;
    nlohmann::json samples = nlohmann::json::array();
    for (auto [t, v] : r.samples) samples.push_back({t, v});
    j["samples"] = samples;
    rep.push_back(j);
  }
  std::ofstream o(path);
  o << rep.dump(2) << "\n";
}

}  // namespace qlw::checks
