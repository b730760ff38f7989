#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"
#include "qlw/analysis.hpp"

using namespace qlw;

TEST_CASE("fit_decay on exact power laws") {
  std::vector<std::pair<double, double>> s3, s12;
  for (double t : {10.0, 30.0, 100.0, 400.0, 2000.0}) {
    s3.emplace_back(t, std::pow(t, -3.0));
    s12.emplace_back(t, 5.0 * std::pow(t, -0.5));
  }
  DecayFit f3 = fit_decay(s3);
  CHECK(f3.slope == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(f3.max_residual <= 1e-12);
  DecayFit f12 = fit_decay(s12);
  CHECK(f12.slope == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(f12.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("fit_decay with multiplicative noise") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-0.05, 0.05);
  std::vector<std::pair<double, double>> s;
  for (int i = 0; i < 24; ++i) {
    double t = 10.0 * std::pow(1000.0, i / 23.0);
    s.emplace_back(t, 3.0 * std::pow(t, -2.0) * (1.0 + uni(rng)));
  }
  CHECK(fit_decay(s).slope == doctest::Approx(-2.0).epsilon(0.025));
}

TEST_CASE("fit_decay input validation") {
  CHECK_THROWS_AS(fit_decay({{1.0, 1.0}, {2.0, 0.5}, {3.0, 0.3}}), DomainError);
  CHECK_THROWS_AS(
      fit_decay({{1.0, 1.0}, {2.0, -0.5}, {3.0, 0.3}, {4.0, 0.2}}), DomainError);
}

namespace {
RadialField make_field(double t, double h, double r_max,
                       const std::function<double(double)>& f) {
  RadialField phi;
  phi.grid = RadialGrid::make(r_max, h);
  phi.t = t;
  phi.values.resize(phi.grid.n);
  for (int j = 0; j < phi.grid.n; ++j) phi.values[j] = f(phi.grid.r(j));
  return phi;
}

double cut_bump(double x) {  // C^2 compactly supported on |x|<1
  if (std::abs(x) >= 1.0) return 0.0;
  double w = 1.0 - x * x;
  return w * w * w;
}

EikonalSolver flat_eik() {
  EikonalConfig cfg;
  cfg.epsilon = 0.05;
  cfg.delta = 0.1;
  return EikonalSolver(cfg, Metric::sound_speed(1.0),
                       ScatteringData(ScatteringData::Profile::Bump, 0.0, 1.0));
}
}  // namespace

TEST_CASE("weighted energy recovers the volume integral") {
  double t = 10.0;
  double w_cut = 0.01;
  RadialField phi = make_field(t, 0.002, 20.0, [](double) { return 0.0; });
  RadialField phi_t = make_field(t, 0.002, 20.0, [&](double r) {
    if (r <= 1.0 - w_cut) return 1.0;
    if (r >= 1.0) return 0.0;
    double x = (1.0 - r) / w_cut;
    return x * x * (3.0 - 2.0 * x);
  });
  RadialField u = make_field(t, 0.002, 20.0, [](double) { return 0.0; });
  EnergyConfig ecfg;
  ecfg.epsilon = 0.0;  // weight forced to 1
  EikonalSolver eik = flat_eik();
  double E = weighted_energy(ecfg, Metric::sound_speed(1.0), eik, u, phi, phi_t);
  CHECK(E == doctest::Approx(4.0 * M_PI / 3.0).epsilon(0.02));
}

TEST_CASE("weighted energy: flat limit and weight bounds") {
  double t = 50.0;
  auto prof = [&](double r) { return cut_bump(r - t); };
  RadialField phi = make_field(t, 0.01, 80.0, prof);
  RadialField phi_t = make_field(t, 0.01, 80.0, prof);
  RadialField u = make_field(t, 0.01, 80.0, [](double) { return 0.0; });
  EikonalSolver eik = flat_eik();

  EnergyConfig flat;
  flat.epsilon = 0.0;
  double e_flat = weighted_energy(flat, Metric::sound_speed(1.0), eik, u, phi, phi_t);
  // direct trapezoid of the flat integrand
  double acc = 0.0;
  for (int j = 1; j + 1 < phi.grid.n; ++j) {
    double r = phi.grid.r(j);
    double dr = (phi.values[j + 1] - phi.values[j - 1]) / (2 * 0.01);
    acc += (phi_t.values[j] * phi_t.values[j] + dr * dr) * r * r;
  }
  CHECK(e_flat == doctest::Approx(4.0 * M_PI * acc * 0.01).epsilon(1e-6));

  EnergyConfig ecfg;
  ecfg.epsilon = 0.05;
  double e_w = weighted_energy(ecfg, Metric::sound_speed(1.0), eik, u, phi, phi_t);
  CHECK(e_w >= e_flat);
  double wmax = std::pow(t, ecfg.c0 * ecfg.epsilon);
  CHECK(e_w <= wmax * e_flat);
  for (double q : {-0.9, 0.0, 5.0, 100.0}) {
    double w = ghost_weight(ecfg, t, q);
    CHECK(w >= 1.0);
    CHECK(w <= wmax);
  }
}

TEST_CASE("weighted energy contract violation") {
  double t = 50.0;
  RadialField phi = make_field(t, 0.05, 80.0, [](double r) { return cut_bump((r - 20.0)); });
  RadialField z = make_field(t, 0.05, 80.0, [](double) { return 0.0; });
  EikonalSolver eik = flat_eik();
  EnergyConfig ecfg;
  CHECK_THROWS_AS(weighted_energy(ecfg, Metric::sound_speed(1.0), eik, z, phi, z),
                  ContractViolation);
}

TEST_CASE("poincare ratios: finiteness, homogeneity, degenerate input") {
  double t = 50.0;
  RadialField phi =
      make_field(t, 0.01, 80.0, [&](double r) { return cut_bump(r - t); });
  double ratio = poincare_flat(phi, t);
  CHECK(std::isfinite(ratio));
  CHECK(ratio > 0.0);
  CHECK(ratio < 10.0);

  RadialField phi2 = phi;
  for (double& v : phi2.values) v *= 2.0;
  CHECK(poincare_flat(phi2, t) == ratio);

  RadialField zero = make_field(t, 0.01, 80.0, [](double) { return 0.0; });
  CHECK_THROWS_AS(poincare_flat(zero, t), DomainError);

  EikonalSolver eik = flat_eik();
  EnergyConfig ecfg;
  ecfg.epsilon = 0.05;
  double wr = poincare_weighted(ecfg, eik, phi, t);
  CHECK(std::isfinite(wr));
  CHECK(poincare_weighted(ecfg, eik, phi2, t) == wr);
  RadialField phi_h =
      make_field(t, 0.005, 80.0, [&](double r) { return cut_bump(r - t); });
  CHECK(poincare_weighted(ecfg, eik, phi_h, t) == doctest::Approx(wr).epsilon(0.1));
}

TEST_CASE("compare_vT degenerate cases and contracts") {
  SolveResult a, b;
  a.grid = RadialGrid::make(10.0, 0.05);
  b.grid = a.grid;
  a.dt = b.dt = 0.02;
  Slice s;
  s.t = 5.0;
  s.v.assign(a.grid.n, 1e-3);
  s.v_t.assign(a.grid.n, 0.0);
  a.slices.push_back(s);
  b.slices.push_back(s);
  CHECK(compare_vT(a, b, {5.0}) == 0.0);

  SolveResult c;
  c.grid = RadialGrid::make(10.0, 0.025);
  c.dt = 0.01;
  CHECK_THROWS_AS(compare_vT(a, c, {5.0}), ContractViolation);
}
