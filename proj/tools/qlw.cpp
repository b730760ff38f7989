// Scenario-driven front end: validate configs, run profile scans and
// backward solves, and produce the verification report.
//
// Exit codes: 0 success, 1 check failure, 2 config error, 3 numerical abort.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "qlw/checks.hpp"
#include "qlw/scenario.hpp"

namespace fs = std::filesystem;
using namespace qlw;

namespace {

int cmd_validate(const std::string& path) {
  Scenario sc = load_scenario(path);
  std::vector<std::string> notes = validate_scenario(sc);
  std::printf("%s", describe(sc).c_str());
  for (const std::string& n : notes) std::printf("# %s\n", n.c_str());
  std::printf("scenario OK\n");
  return 0;
}

int cmd_profile(const std::string& path, const std::string& out_override) {
  Scenario sc = load_scenario(path);
  validate_scenario(sc);
  std::string out_dir = out_override.empty() ? sc.out_dir : out_override;
  fs::create_directories(out_dir);

  Metric metric = make_metric(sc);
  ScatteringData data = make_data(sc);
  ProfileEvaluator prof(metric, data, make_eikonal_config(sc),
                        make_profile_config(sc));
  const EikonalSolver& eik = prof.eikonal();
  const double R = sc.R;

  std::mt19937_64 rng(sc.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double T_R = resolved_T_R(sc);
  std::vector<double> t_list;
  for (int i = 0; i < 8; ++i)
    t_list.push_back(2.0 * T_R * std::pow(10.0, i / 7.0 * 2.0));

  std::string tmp = out_dir + "/.profile_scan.tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "w");
  if (!f) throw Error("cannot open " + tmp);
  std::fprintf(f, "t,r,q,u_app,eik_res,pde_res,scat_res\n");
  for (double t : t_list) {
    std::vector<double> radii;
    for (int k = 0; k < 16; ++k) {
      double q = (-0.95 + 1.9 * k / 15.0) * R + 0.02 * R * uni(rng);
      radii.push_back(eik.invert_q(t, q));
    }
    for (int k = 0; k < 8; ++k)
      radii.push_back(t * (1.05 + 0.4 * k / 7.0 + 0.01 * uni(rng)));
    for (double r : radii) {
      double q = eik.solve_q(t, r);
      std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t, r, q,
                   prof.eval_u_app(t, r), prof.eikonal_residual(t, r),
                   prof.pde_residual(t, r), prof.scattering_identity_residual(t, r));
    }
  }
  std::fclose(f);
  fs::rename(tmp, out_dir + "/profile_scan.csv");
  std::printf("wrote %s/profile_scan.csv (%zu rows)\n", out_dir.c_str(),
              t_list.size() * 24);
  return 0;
}

int solve_one(const Scenario& sc, double T, const std::string& out_dir) {
  SolveConfig cfg = make_solve_config(sc, T);
  SolveResult res = backward_solve(cfg);
  std::string dir = out_dir + "/T" + std::to_string(static_cast<long>(T));
  write_slices(dir, cfg, res);
  if (!res.cert.completed) {
    nlohmann::json j;
    j["last_stable_t"] = res.cert.last_stable_t;
    j["reason"] = res.cert.abort_reason;
    std::ofstream o(dir + "/abort.json");
    o << j.dump(2) << "\n";
    std::fprintf(stderr, "solve T=%g aborted at t=%g: %s\n", T,
                 res.cert.last_stable_t, res.cert.abort_reason.c_str());
    return 3;
  }
  std::printf("solve T=%g done, %zu slices -> %s\n", T, res.slices.size(),
              dir.c_str());
  return 0;
}

int cmd_solve(const std::string& path, double T, const std::string& out_override,
              int threads_override) {
  Scenario sc = load_scenario(path);
  validate_scenario(sc);
  std::string out_dir = out_override.empty() ? sc.out_dir : out_override;
  fs::create_directories(out_dir);
  int threads = threads_override > 0 ? threads_override : sc.threads;

  std::vector<double> T_list = T > 0.0 ? std::vector<double>{T} : sc.T_list;
  if (T > 0.0 && !(T > resolved_t_min(sc)))
    throw ConfigError("solve: T must exceed t_min");

  int rc = 0;
  std::vector<std::future<int>> futs;
  for (double Tv : T_list) {
    if (threads > 1) {
      futs.push_back(
          std::async(std::launch::async, [&, Tv] { return solve_one(sc, Tv, out_dir); }));
      if (static_cast<int>(futs.size()) >= threads) {
        rc = std::max(rc, futs.front().get());
        futs.erase(futs.begin());
      }
    } else {
      rc = std::max(rc, solve_one(sc, Tv, out_dir));
    }
  }
  for (auto& fu : futs) rc = std::max(rc, fu.get());
  return rc;
}

int cmd_verify(const std::string& path, const std::string& out_override,
               int threads_override) {
  (void)threads_override;
  Scenario sc = load_scenario(path);
  validate_scenario(sc);
  std::string out_dir = out_override.empty() ? sc.out_dir : out_override;
  fs::create_directories(out_dir);

  auto enabled = [&](const std::string& name, bool dflt) {
    auto it = sc.checks.find(name);
    return it == sc.checks.end() ? dflt : it->second;
  };
  auto tol = [&](const std::string& name, double dflt) {
    auto it = sc.tolerances.find(name);
    return it == sc.tolerances.end() ? dflt : it->second;
  };
  auto apply_tol = [&](checks::CheckResult r, double target) {
    double want = tol(r.name, r.tolerance);
    if (want != r.tolerance && std::isfinite(r.slope)) {
      r.tolerance = want;
      r.pass = std::abs(r.slope - target) <= want;
    }
    return r;
  };

  Metric metric = make_metric(sc);
  ScatteringData data = make_data(sc);
  AsymptoticState state(data, metric, sc.omega, sc.quad_tol);
  EikonalSolver eik(make_eikonal_config(sc), metric, data);
  ProfileEvaluator prof(metric, data, make_eikonal_config(sc),
                        make_profile_config(sc));

  std::vector<checks::CheckResult> results;
  if (enabled("reduced_oracle", true)) results.push_back(checks::reduced_oracle(state));
  if (enabled("general_blowup", true)) results.push_back(checks::general_blowup());
  if (enabled("optical_exactness", true))
    results.push_back(checks::optical_exactness(eik, sc.seed));
  if (enabled("nu_decay", true))
    results.push_back(apply_tol(checks::nu_decay(eik), -1.0));
  if (enabled("refined_nu", true))
    results.push_back(apply_tol(checks::refined_nu(eik), -2.0));
  if (enabled("eikonal_residual", true))
    results.push_back(apply_tol(checks::eikonal_residual_slope(prof), -2.0));
  if (enabled("pde_residual", true))
    results.push_back(apply_tol(checks::pde_residual_slope(prof), -3.0));
  if (enabled("poincare", true)) results.push_back(checks::poincare(sc));

  // Artifact-based checks read completed solve outputs.
  std::map<double, LoadedRun> loaded;
  auto need_run = [&](double T) -> const SolveResult& {
    auto it = loaded.find(T);
    if (it == loaded.end()) {
      std::string dir = out_dir + "/T" + std::to_string(static_cast<long>(T));
      it = loaded.emplace(T, load_slices(dir)).first;
    }
    return it->second.res;
  };

  if (enabled("energy_decay", false)) {
    double Tmax = *std::max_element(sc.T_list.begin(), sc.T_list.end());
    results.push_back(apply_tol(
        checks::energy_decay(need_run(Tmax), resolved_T_R(sc), Tmax, 0.0), -0.5));
  }
  if (enabled("support_confinement", false)) {
    for (double T : sc.T_list)
      results.push_back(checks::support_confinement(
          need_run(T), std::to_string(static_cast<long>(T))));
  }
  if (enabled("cauchy", false)) {
    std::map<double, const SolveResult*> ptrs;
    for (double T : sc.T_list) ptrs[T] = &need_run(T);
    results.push_back(apply_tol(checks::cauchy_property(ptrs, 0.0), -0.5));
  }
  if (enabled("scattering", false)) {
    double Tmax = *std::max_element(sc.T_list.begin(), sc.T_list.end());
    checks::ScatteringPair pair =
        checks::scattering_identity(need_run(Tmax), Tmax, prof);
    results.push_back(apply_tol(pair.pointwise, -1.5));
    results.push_back(apply_tol(pair.energy, -0.5));
  }
  if (enabled("self_convergence", false)) {
    double Tsc = sc.T_list.front();
    results.push_back(checks::self_convergence(make_solve_config(sc, Tsc), Tsc));
  }

  checks::write_report(out_dir + "/report.json", results);
  if (results.empty()) {
    std::printf("warning: no checks enabled\n");
    return 0;
  }
  bool all = true;
  for (const auto& r : results) {
    std::printf("%-28s %s  slope=%-10.4g tol=%-8.3g %s\n", r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.slope, r.tolerance, r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("report -> %s/report.json\n", out_dir.c_str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasilinear wave scattering laboratory"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir;
  double T = 0.0;
  int threads = 0;

  CLI::App* validate = app.add_subcommand("validate", "check a scenario file");
  validate->add_option("--scenario", scenario_path, "scenario TOML path")->required();

  CLI::App* profile = app.add_subcommand("profile", "residual scan CSV");
  profile->add_option("--scenario", scenario_path)->required();
  profile->add_option("--out", out_dir);

  CLI::App* solve = app.add_subcommand("solve", "backward solve, write slices");
  solve->add_option("--scenario", scenario_path)->required();
  solve->add_option("--T", T, "cutoff time (default: every T in the scenario)");
  solve->add_option("--out", out_dir);
  solve->add_option("--threads", threads);

  CLI::App* verify = app.add_subcommand("verify", "run enabled checks");
  verify->add_option("--scenario", scenario_path)->required();
  verify->add_option("--out", out_dir);
  verify->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(scenario_path);
    if (profile->parsed()) return cmd_profile(scenario_path, out_dir);
    if (solve->parsed()) return cmd_solve(scenario_path, T, out_dir, threads);
    if (verify->parsed()) return cmd_verify(scenario_path, out_dir, threads);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical abort: %s (achieved %g at %g)\n", e.what(),
                 e.achieved, e.location);
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
