#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qlw/model.hpp"

using namespace qlw;

namespace {
Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Vec3 v{n(rng), n(rng), n(rng)};
  return v.normalized();
}
}  // namespace

TEST_CASE("null form of the sound-speed model is -2c'(0), independent of omega") {
  Metric m = Metric::sound_speed(1.0);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Vec3 w = random_unit(rng);
    CHECK(m.null_form(w) == doctest::Approx(-2.0).epsilon(1e-14));
  }
  Metric m3 = Metric::sound_speed(0.7);
  CHECK(m3.null_form({0, 0, 1}) == doctest::Approx(-1.4).epsilon(1e-14));
}

TEST_CASE("null form special cases") {
  CHECK(Metric::general_linearized(Mat4::zero()).null_form({0, 1, 0}) == 0.0);
  Mat4 g = Mat4::diag(1.0, 0.0, 0.0, 0.0);
  CHECK(Metric::general_linearized(g).null_form({0, 0, 1}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(Metric::sound_speed(1.0).null_form({0, 0, 1.001}), DomainError);
}

TEST_CASE("g_lin of the sound-speed model matches the direct expansion") {
  Metric m = Metric::sound_speed(2.5);
  CHECK(m.g_lin()(0, 0) == 0.0);
  for (int i = 1; i < 4; ++i) {
    CHECK(m.g_lin()(0, i) == 0.0);
    CHECK(m.g_lin()(i, i) == -5.0);
  }
}

TEST_CASE("gtilde evaluation") {
  Metric m = Metric::sound_speed(1.0);
  Mat4 g0 = m.gtilde(0.0);
  CHECK(g0(0, 0) == 1.0);
  CHECK(g0(1, 1) == -1.0);
  CHECK(g0(3, 3) == -1.0);
  CHECK(g0.symmetric(0.0));

  Mat4 g = m.gtilde(0.1);
  CHECK(g(1, 1) == doctest::Approx(-1.21).epsilon(1e-15));
  CHECK(g.symmetric(0.0));

  CHECK_THROWS_AS(m.gtilde(-1.0), DomainError);
  Mat4 glin = Mat4::diag(0, -2, -2, -2);
  CHECK_THROWS_AS(Metric::general_linearized(glin).gtilde(0.0), UnsupportedError);
  CHECK_THROWS_AS(Metric::general_linearized(Mat4::diag(1, 2, 3, 4)).c_prime0(),
                  UnsupportedError);
}

TEST_CASE("gtilde_linearized reduces to Minkowski at u=0") {
  Metric m = Metric::sound_speed(1.0);
  Mat4 g = m.gtilde_linearized(0.0);
  CHECK(g(0, 0) == 1.0);
  CHECK(g(2, 2) == -1.0);
  Mat4 full = m.gtilde(1e-6);
  Mat4 lin = m.gtilde_linearized(1e-6);
  CHECK(full(1, 1) == doctest::Approx(lin(1, 1)).epsilon(1e-10));
}

TEST_CASE("scattering data support and symmetry") {
  for (auto p : {ScatteringData::Profile::Bump, ScatteringData::Profile::SineBump,
                 ScatteringData::Profile::Spline}) {
    ScatteringData d(p, 1.0, 2.0);
    CHECK(d.a(2.0) == 0.0);
    CHECK(d.a(2.001) == 0.0);
    CHECK(d.a(-5.0) == 0.0);
    CHECK(d.a_q(2.0) == 0.0);
    CHECK(d.a_q(-2.001) == 0.0);
    CHECK(d.a(0.3) == d.a(-0.3));
  }
  CHECK_THROWS_AS(ScatteringData(ScatteringData::Profile::Bump, 1.0, 0.5), DomainError);
}

TEST_CASE("eval_A examples") {
  ScatteringData d(ScatteringData::Profile::Bump, 1.0, 1.0);
  Vec3 w{0, 0, 1};
  CHECK(d.eval(1.001, w) == 0.0);
  CHECK(d.eval(0.0, w) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  ScatteringData z(ScatteringData::Profile::Bump, 0.0, 1.0);
  CHECK(z.eval(0.3, w) == 0.0);
  CHECK(z.vanishes());

  ScatteringData ang(ScatteringData::Profile::Bump, 2.0, 1.0,
                     ScatteringData::Angular::LinearZ, 0.5);
  CHECK(ang.eval(0.0, {0, 0, 1}) ==
        doctest::Approx(2.0 * std::exp(-1.0) * 1.5).epsilon(1e-14));
  CHECK(ang.eval(0.0, {1, 0, 0}) == doctest::Approx(2.0 * std::exp(-1.0)));
}

TEST_CASE("analytic q-derivatives agree with central differences at order >= 1.9") {
  for (auto p : {ScatteringData::Profile::Bump, ScatteringData::Profile::SineBump,
                 ScatteringData::Profile::Spline}) {
    ScatteringData d(p, 1.3, 1.5);
    for (double q : {-0.9, -0.3, 0.2, 0.8, 1.2}) {
      double h = 1e-3;
      auto fd_err = [&](double step) {
        double fd = (d.a(q + step) - d.a(q - step)) / (2 * step);
        return std::abs(fd - d.a_q(q));
      };
      double e1 = fd_err(h), e2 = fd_err(h / 2);
      if (e1 > 1e-13 && e2 > 1e-13)  // skip roundoff-dominated points
        CHECK(oracles::observed_order(e1, e2) >= 1.9);
      auto fd2_err = [&](double step) {
        double fd = (d.a_q(q + step) - d.a_q(q - step)) / (2 * step);
        return std::abs(fd - d.a_qq(q));
      };
      double f1 = fd2_err(h), f2 = fd2_err(h / 2);
      if (f1 > 1e-12 && f2 > 1e-12)
        CHECK(oracles::observed_order(f1, f2) >= 1.9);
    }
    double a, aq;
    d.a_pair(0.37, a, aq);
    CHECK(a == doctest::Approx(d.a(0.37)).epsilon(1e-15));
    CHECK(aq == doctest::Approx(d.a_q(0.37)).epsilon(1e-14));
  }
}
