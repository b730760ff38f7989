#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "qlw/analysis.hpp"

using namespace qlw;

namespace {
SolveConfig small_config(double amplitude, double T = 30.0, double h = 0.05) {
  SolveConfig cfg;
  cfg.T = T;
  cfg.h = h;
  cfg.cfl = 0.4;
  cfg.metric = Metric::sound_speed(1.0);
  cfg.data = ScatteringData(ScatteringData::Profile::Bump, amplitude, 1.0);
  cfg.ecfg.epsilon = 0.05;
  cfg.ecfg.delta = 0.1;
  cfg.pcfg.T_R = 20.0;
  cfg.t_min = 15.0;
  cfg.record_times = {15.0, 25.0, 2.0 * T};
  return cfg;
}
}  // namespace

TEST_CASE("chi cutoff shape") {
  CHECK(chi(0.0) == 1.0);
  CHECK(chi(0.5) == 1.0);
  CHECK(chi(1.0) == 1.0);
  CHECK(chi(2.0) == 0.0);
  CHECK(chi(3.0) == 0.0);
  CHECK(chi(1.5) == doctest::Approx(0.5));
  CHECK(chi(-1.5) == chi(1.5));
}

TEST_CASE("null test: vanishing data gives the zero solution") {
  SolveResult res = backward_solve(small_config(0.0));
  CHECK(res.cert.completed);
  CHECK(res.cert.max_abs_v <= 1e-12);
  REQUIRE(res.slices.size() == 3);
  CHECK(res.slices.back().t == doctest::Approx(60.0));
  for (double v : res.slices.back().v) CHECK(v == 0.0);
  for (double leak : res.support_leak_rel) CHECK(leak <= 1e-8);
}

TEST_CASE("data slice at t = 2T is exactly zero") {
  SolveResult res = backward_solve(small_config(1.0));
  CHECK(res.cert.completed);
  const Slice& top = res.slices.back();
  CHECK(top.t == doctest::Approx(60.0));
  for (double v : top.v) CHECK(v == 0.0);
  for (double vt : top.v_t) CHECK(vt == 0.0);
  CHECK(res.cert.max_abs_v > 0.0);
}

TEST_CASE("residual check vanishes for zero data and is small for data") {
  SolveConfig cfg = small_config(0.0);
  SolveResult res = backward_solve(cfg);
  CHECK(residual_check(cfg, res.grid, res.slices[1]) <= 1e-12);

  SolveConfig cfg1 = small_config(1.0);
  SolveResult res1 = backward_solve(cfg1);
  double rc = residual_check(cfg1, res1.grid, res1.slices[1]);  // t=25, chi=1
  CHECK(rc > 0.0);
  CHECK(rc < 1e-4);
}

TEST_CASE("residual check h-convergence at resolved spacing") {
  // The scheme identity makes the t <= T residual independent of v, so a
  // zero slice probes the discretization directly.
  auto rc_at = [&](double h) {
    SolveConfig cfg = small_config(1.0, 50.0, h);
    cfg.t_min = 20.0;
    RadialGrid grid = RadialGrid::make(6.0 * cfg.T + 4.0, h);
    Slice zero;
    zero.t = 25.0;
    zero.v.assign(grid.n, 0.0);
    zero.v_t.assign(grid.n, 0.0);
    return residual_check(cfg, grid, zero);
  };
  double factor = rc_at(0.025) / rc_at(0.0125);
  CHECK(factor >= 3.0);
  CHECK(factor <= 5.0);
}

TEST_CASE("residual check at t=1.5T matches the chi-scaled source identity") {
  SolveConfig cfg = small_config(1.0);
  cfg.record_times = {45.0};
  SolveResult res = backward_solve(cfg);
  double rc = residual_check(cfg, res.grid, res.slices[0]);

  // (1 - chi) times the max PDE residual of u_app over the band, up to
  // discretization error of the stencils.
  ProfileEvaluator prof(cfg.metric, cfg.data, cfg.ecfg, cfg.pcfg);
  double t = 45.0;
  double sup = 0.0;
  for (double r = t - 0.95; r <= 1.5 * t; r += 0.12)
    sup = std::max(sup, std::abs(prof.pde_residual(t, r)));
  double expected = (1.0 - chi(t / cfg.T)) * sup;
  double h2_scale = residual_check(cfg, res.grid, res.slices[0]);
  // the identity holds to the h^2 stencil error measured at chi=1 times
  SolveConfig cfg25 = small_config(1.0);
  SolveResult res25 = backward_solve(cfg25);
  double stencil_err = residual_check(cfg25, res25.grid, res25.slices[1]);
  (void)h2_scale;
  CHECK(std::abs(rc - expected) <= 0.25 * expected + 2.0 * stencil_err);
}

TEST_CASE("time reversal returns to zero data") {
  SolveConfig cfg = small_config(1.0, 25.0);
  cfg.t_min = 15.0;
  cfg.record_times = {15.0};
  SolveResult back = backward_solve(cfg);
  REQUIRE(back.slices.size() == 1);
  Slice fwd = forward_evolve(cfg, back.slices[0], 50.0);

  SolveConfig cfg_fine = cfg;
  cfg_fine.cfl = 0.2;  // halved time step, same grid: time-truncation probe
  SolveResult back_fine = backward_solve(cfg_fine);
  double trunc = 0.0, ret = 0.0;
  for (int j = 0; j < back.grid.n; ++j) {
    trunc = std::max(trunc, std::abs(back.slices[0].v[j] - back_fine.slices[0].v[j]));
    ret = std::max(ret, std::abs(fwd.v[j]));
  }
  CHECK(ret <= 10.0 * std::max(trunc, 1e-14));
}

TEST_CASE("solver validation errors") {
  SolveConfig cfg = small_config(1.0);
  cfg.h = 0.2;  // h > R/20
  CHECK_THROWS_AS(backward_solve(cfg), DomainError);
  cfg = small_config(1.0);
  cfg.cfl = 1.5;
  CHECK_THROWS_AS(backward_solve(cfg), DomainError);
  cfg = small_config(1.0);
  cfg.metric = Metric::general_linearized(Mat4::diag(0, -2, -2, -2));
  CHECK_THROWS_AS(backward_solve(cfg), UnsupportedError);
  cfg = small_config(1.0);
  cfg.r_max = 2.0 * cfg.T;  // must cover 6T
  CHECK_THROWS_AS(backward_solve(cfg), DomainError);
  cfg = small_config(1.0);
  cfg.data = ScatteringData(ScatteringData::Profile::Bump, 1.0, 1.0,
                            ScatteringData::Angular::LinearZ, 0.3);
  CHECK_THROWS_AS(backward_solve(cfg), UnsupportedError);
}

TEST_CASE("slice persistence round trip") {
  namespace fs = std::filesystem;
  SolveConfig cfg = small_config(1.0);
  SolveResult res = backward_solve(cfg);
  std::string dir = (fs::temp_directory_path() / "qlw_slices_test").string();
  fs::remove_all(dir);
  write_slices(dir, cfg, res);
  LoadedRun run = load_slices(dir);
  CHECK(run.T == cfg.T);
  CHECK(run.h == cfg.h);
  REQUIRE(run.res.slices.size() == res.slices.size());
  for (std::size_t i = 0; i < res.slices.size(); ++i) {
    CHECK(run.res.slices[i].t == doctest::Approx(res.slices[i].t));
    for (std::size_t j = 0; j < res.slices[i].v.size(); j += 997) {
      CHECK(run.res.slices[i].v[j] == res.slices[i].v[j]);      // %.17g round trip
      CHECK(run.res.slices[i].v_t[j] == res.slices[i].v_t[j]);
    }
  }
  fs::remove_all(dir);
  CHECK_THROWS_AS(load_slices(dir), Error);
}
