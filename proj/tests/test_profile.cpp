#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qlw/profile.hpp"

using namespace qlw;

namespace {
ProfileEvaluator make_prof(double amplitude = 1.0, double epsilon = 0.05,
                           double fd_step = 0.25) {
  EikonalConfig ecfg;
  ecfg.epsilon = epsilon;
  ecfg.delta = 0.1;
  ecfg.ode_tol = 1e-12;
  ProfileConfig pcfg;
  pcfg.fd_step = fd_step;
  return ProfileEvaluator(Metric::sound_speed(1.0),
                          ScatteringData(ScatteringData::Profile::Bump, amplitude, 1.0),
                          ecfg, pcfg);
}
}  // namespace

TEST_CASE("psi plateau and support") {
  CHECK(ProfileEvaluator::psi(0.75) == 1.0);
  CHECK(ProfileEvaluator::psi(1.0) == 1.0);
  CHECK(ProfileEvaluator::psi(1.25) == 1.0);
  CHECK(ProfileEvaluator::psi(0.5) == 0.0);
  CHECK(ProfileEvaluator::psi(1.5) == 0.0);
  CHECK(ProfileEvaluator::psi(0.2) == 0.0);
  CHECK(ProfileEvaluator::psi(1.9) == 0.0);
  CHECK(ProfileEvaluator::psi(0.625) > 0.0);
  CHECK(ProfileEvaluator::psi(0.625) < 1.0);
  // analytic derivatives of the cutoff against finite differences
  for (double x : {0.6, 0.7, 1.3, 1.45}) {
    double h = 1e-5;
    double fd1 = (ProfileEvaluator::psi(x + h) - ProfileEvaluator::psi(x - h)) / (2 * h);
    CHECK(fd1 == doctest::Approx(ProfileEvaluator::psi_d1(x)).epsilon(1e-7));
    double fd2 = (ProfileEvaluator::psi_d1(x + h) - ProfileEvaluator::psi_d1(x - h)) /
                 (2 * h);
    CHECK(fd2 == doctest::Approx(ProfileEvaluator::psi_d2(x)).epsilon(1e-6));
  }
}

TEST_CASE("eta switches on over [T_R, 2 T_R]") {
  ProfileEvaluator prof = make_prof();
  double T_R = prof.T_R();
  CHECK(T_R == 20.0);  // default rule at eps=0.05, delta=0.1, R=1
  CHECK(prof.eta(T_R) == 0.0);
  CHECK(prof.eta(0.5 * T_R) == 0.0);
  CHECK(prof.eta(2.0 * T_R) == 1.0);
  CHECK(prof.eta(3.0 * T_R) == 1.0);
  CHECK(prof.eta(1.5 * T_R) == doctest::Approx(0.5));
}

TEST_CASE("default T_R rule") {
  CHECK(ProfileEvaluator::default_T_R(0.05, 0.1, 1.0) == 20.0);
  CHECK(ProfileEvaluator::default_T_R(0.5, 0.1, 10.0) == 40.0);  // 4R wins
  CHECK(ProfileEvaluator::default_T_R(0.08, 0.1, 1.0) ==
        doctest::Approx(std::exp(2.5)));  // activation scale wins below the cap
}

TEST_CASE("u_app support") {
  ProfileEvaluator prof = make_prof();
  CHECK(prof.eval_u_app(10.0, 10.0) == 0.0);   // t < T_R
  CHECK(prof.eval_u_app(100.0, 98.0) == 0.0);  // r <= t - R
  CHECK(prof.eval_u_app(100.0, 160.0) == 0.0); // r = 1.6t
  CHECK(prof.eval_u_app(100.0, 30.0) == 0.0);  // psi support
  CHECK(prof.eval_u_app(100.0, 100.5) != 0.0);
  CHECK(prof.eval_u_app(0.0, 0.0) == 0.0);     // r = 0 well-defined
}

TEST_CASE("u_app equals eps U / r on the cutoff plateau") {
  ProfileEvaluator prof = make_prof();
  for (double t : {50.0, 300.0}) {
    for (double dr : {-0.7, 0.1, 0.9}) {
      double r = t + dr;
      double u = prof.eval_u_app(t, r);
      double U = prof.eval_U(t, r);
      CHECK(r * u / 0.05 == doctest::Approx(U).epsilon(1e-14));
    }
  }
}

TEST_CASE("eval_U composes the optical function with the profile") {
  ProfileEvaluator prof = make_prof();
  CHECK(prof.eval_U(100.0, 95.0) == 0.0);
  CHECK(prof.eval_U(100.0, 130.0) == doctest::Approx(prof.outer_U(100.0)));
  ProfileEvaluator zero = make_prof(0.0);
  CHECK(zero.eval_U(100.0, 100.0) == 0.0);
  CHECK(zero.eval_u_app(100.0, 100.0) == 0.0);
}

TEST_CASE("analytic first derivatives agree with finite differences") {
  ProfileEvaluator prof = make_prof();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    double t = 60.0 * std::pow(30.0, uni(rng));
    double r = t * (0.8 + 0.65 * uni(rng));
    auto d = prof.u_app_derivs(t, r);
    auto fd_t = [&](double h) {
      return (prof.eval_u_app(t + h, r) - prof.eval_u_app(t - h, r)) / (2 * h);
    };
    auto fd_r = [&](double h) {
      return (prof.eval_u_app(t, r + h) - prof.eval_u_app(t, r - h)) / (2 * h);
    };
    double h = 1e-3;
    double et1 = std::abs(fd_t(h) - d.u_t), et2 = std::abs(fd_t(h / 2) - d.u_t);
    double er1 = std::abs(fd_r(h) - d.u_r), er2 = std::abs(fd_r(h / 2) - d.u_r);
    if (et2 > 1e-13) CHECK(oracles::observed_order(et1, et2) >= 1.9);
    if (er2 > 1e-13) CHECK(oracles::observed_order(er1, er2) >= 1.9);
    CHECK(d.u == doctest::Approx(prof.eval_u_app(t, r)).epsilon(1e-12));
  }
}

TEST_CASE("scattering identity residual") {
  ProfileEvaluator zero = make_prof(0.0);
  CHECK(zero.scattering_identity_residual(100.0, 100.0) == 0.0);

  ProfileEvaluator prof = make_prof();
  // (d_t - d_r) u_app cross-checked against finite differences
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    double t = 50.0 * std::pow(40.0, uni(rng));
    double r = t + (-1.0 + 3.0 * uni(rng));
    double an = prof.du_app_minus(t, r);
    auto fd = [&](double h) {
      return (prof.eval_u_app(t + h, r - h) - prof.eval_u_app(t - h, r + h)) / (2 * h);
    };
    double e1 = std::abs(fd(1e-3) - an), e2 = std::abs(fd(5e-4) - an);
    if (e2 > 1e-14) CHECK(oracles::observed_order(e1, e2) >= 1.9);
  }

  // sup over the band decays ~ t^-2 for u_app alone
  const EikonalSolver& eik = prof.eikonal();
  std::vector<double> ts = {60.0, 200.0, 700.0, 2500.0}, sups;
  for (double t : ts) {
    double sup = 0.0;
    for (double dq = -1.0; dq <= 1.0; dq += 0.2)
      sup = std::max(sup,
                     std::abs(prof.scattering_identity_residual(t, eik.invert_q(t, dq))));
    sups.push_back(sup);
  }
  double slope = std::log(sups.back() / sups.front()) / std::log(ts.back() / ts.front());
  CHECK(slope == doctest::Approx(-2.0).epsilon(0.125));
}

TEST_CASE("eikonal residual: zero data, decay, and the leading-term identity") {
  ProfileEvaluator zero = make_prof(0.0);
  CHECK(zero.eikonal_residual(100.0, 100.0) == doctest::Approx(0.0).epsilon(1e-14));

  ProfileEvaluator prof = make_prof();
  const EikonalSolver& eik = prof.eikonal();
  std::vector<double> ts = {100.0, 400.0, 1600.0, 6400.0}, vals;
  for (double t : ts)
    vals.push_back(std::abs(prof.eikonal_residual(t, eik.invert_q(t, 0.0))));
  double slope = std::log(vals.back() / vals.front()) / std::log(ts.back() / ts.front());
  CHECK(slope == doctest::Approx(-2.0).epsilon(0.1));

  // residual ~ mu (nu + eps G mu U/(4t)) + eps G mu^2 U (t-r)/(4 t r)
  double t = 1e4;
  double r = eik.invert_q(t, 0.0);
  OpticalSample o = eik.sample(t, r);
  const AsymptoticState& st = prof.state();
  double s = eik.slow_time(t);
  double U = st.U(s, o.q);
  double eps = prof.epsilon(), G = st.G();
  double lead = o.mu * (o.nu + 0.25 * eps * G * o.mu * U / t) +
                eps * G * o.mu * o.mu * U * (t - r) / (4.0 * t * r);
  double res = prof.eikonal_residual(t, r);
  CHECK(std::abs(res - lead) <= 0.2 * std::abs(res));
}

TEST_CASE("pde residual: zero data, decay, Richardson step consistency") {
  ProfileEvaluator zero = make_prof(0.0);
  CHECK(std::abs(zero.pde_residual(100.0, 100.0)) <= 1e-12);

  ProfileEvaluator prof = make_prof(1.0, 0.02);
  const EikonalSolver& eik = prof.eikonal();
  std::vector<double> ts = {100.0, 500.0, 2500.0, 10000.0}, sups;
  for (double t : ts) {
    double sup = 0.0;
    for (double dq = -0.9; dq <= 0.91; dq += 0.3)
      sup = std::max(sup, std::abs(prof.pde_residual(t, eik.invert_q(t, dq))));
    for (double x : {1.05, 1.2, 1.3, 1.4, 1.45})
      sup = std::max(sup, std::abs(prof.pde_residual(t, x * t)));
    sups.push_back(sup);
  }
  double slope = std::log(sups.back() / sups.front()) / std::log(ts.back() / ts.front());
  CHECK(slope == doctest::Approx(-3.0).epsilon(0.08));

  ProfileEvaluator prof_half = make_prof(1.0, 0.02, 0.125);
  double a = std::abs(prof.pde_residual(1e3, 1.35e3));
  double b = std::abs(prof_half.pde_residual(1e3, 1.35e3));
  CHECK(std::abs(a - b) <= 0.01 * b);

  CHECK_THROWS_AS(prof.pde_residual(100.0, 1e-9), DomainError);
}

TEST_CASE("|d u_app| decays like 1/t") {
  ProfileEvaluator prof = make_prof();
  const EikonalSolver& eik = prof.eikonal();
  std::vector<double> ts = {60.0, 240.0, 960.0, 3840.0}, sups;
  for (double t : ts) {
    double sup = 0.0;
    for (double dq = -1.0; dq <= 1.01; dq += 0.25) {
      auto d = prof.u_app_derivs(t, eik.invert_q(t, dq));
      sup = std::max(sup, std::abs(d.u_t) + std::abs(d.u_r));
    }
    sups.push_back(sup);
  }
  double slope = std::log(sups.back() / sups.front()) / std::log(ts.back() / ts.front());
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("in-band pde residual stays bounded against eps t^-2") {
  ProfileEvaluator prof = make_prof();
  const EikonalSolver& eik = prof.eikonal();
  for (double t : {100.0, 1000.0}) {
    for (double dq : {-0.5, 0.0, 0.5}) {
      double res = std::abs(prof.pde_residual(t, eik.invert_q(t, dq)));
      CHECK(res <= 1.0 * prof.epsilon() / (t * t));
    }
  }
}
