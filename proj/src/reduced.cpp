#include "qlw/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qlw/quadrature.hpp"

namespace qlw {

AsymptoticState::AsymptoticState(ScatteringData data, const Metric& metric, Vec3 omega,
                                 double quad_tol)
    : data_(std::move(data)), omega_(omega), b_(data_.b(omega)),
      G_(metric.null_form(omega)), quad_tol_(quad_tol) {}

double AsymptoticState::mu(double s, double q) const {
  return -2.0 * std::exp(0.5 * G_ * A(q) * s);
}

double AsymptoticState::mu_q(double s, double q) const {
  return 0.5 * G_ * A_q(q) * s * mu(s, q);
}

double AsymptoticState::Uq(double s, double q) const {
  double a = A(q);
  return a * std::exp(-0.5 * G_ * a * s);
}

double AsymptoticState::Uqq(double s, double q) const {
  double a = A(q);
  return A_q(q) * (1.0 - 0.5 * G_ * a * s) * std::exp(-0.5 * G_ * a * s);
}

double AsymptoticState::U_between(double s, double q0, double q1, double tol) const {
  double R = data_.R();
  double a = std::max(q0, -R), b = std::min(q1, R);
  if (b <= a || data_.vanishes()) return 0.0;
  return integrate([&](double p) { return Uq(s, p); }, a, b,
                   tol > 0.0 ? tol : quad_tol_);
}

double AsymptoticState::Us_between(double s, double q0, double q1, double tol) const {
  double R = data_.R();
  double a = std::max(q0, -R), b = std::min(q1, R);
  if (b <= a || data_.vanishes()) return 0.0;
  return integrate(
      [&](double p) {
        double ap = A(p);
        return -0.5 * G_ * ap * ap * std::exp(-0.5 * G_ * ap * s);
      },
      a, b, tol > 0.0 ? tol : quad_tol_);
}

double AsymptoticState::U(double s, double q) const {
  return U_between(s, -data_.R(), q);
}

double AsymptoticState::Us(double s, double q) const {
  return Us_between(s, -data_.R(), q);
}

ReducedTrajectories integrate_reduced_ode(const AsymptoticState& state, double s_max,
                                          int n_steps,
                                          const std::vector<double>& q_grid) {
  if (s_max <= 0.0) throw DomainError("integrate_reduced_ode: s_max must be positive");
  if (n_steps < 1) throw DomainError("integrate_reduced_ode: n_steps must be >= 1");

  ReducedTrajectories tr;
  tr.q = q_grid;
  tr.s.resize(n_steps + 1);
  const std::size_t nq = q_grid.size();
  tr.mu.resize((n_steps + 1) * nq);
  tr.uq.resize((n_steps + 1) * nq);

  const double G = state.G();
  const double ds = s_max / n_steps;
  for (int i = 0; i <= n_steps; ++i) tr.s[i] = s_max * i / n_steps;

  for (std::size_t j = 0; j < nq; ++j) {
    double m = -2.0;
    double u = state.A(q_grid[j]);
    tr.mu[j] = m;
    tr.uq[j] = u;
    auto fmu = [G](double m_, double u_) { return -0.25 * G * m_ * m_ * u_; };
    auto fuq = [G](double m_, double u_) { return 0.25 * G * m_ * u_ * u_; };
    for (int i = 1; i <= n_steps; ++i) {
      double k1m = fmu(m, u), k1u = fuq(m, u);
      double k2m = fmu(m + 0.5 * ds * k1m, u + 0.5 * ds * k1u);
      double k2u = fuq(m + 0.5 * ds * k1m, u + 0.5 * ds * k1u);
      double k3m = fmu(m + 0.5 * ds * k2m, u + 0.5 * ds * k2u);
      double k3u = fuq(m + 0.5 * ds * k2m, u + 0.5 * ds * k2u);
      double k4m = fmu(m + ds * k3m, u + ds * k3u);
      double k4u = fuq(m + ds * k3m, u + ds * k3u);
      m += ds / 6.0 * (k1m + 2.0 * k2m + 2.0 * k3m + k4m);
      u += ds / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
      tr.mu[i * nq + j] = m;
      tr.uq[i * nq + j] = u;
    }
  }
  return tr;
}

void write_reduced_csv(const AsymptoticState& state, const ReducedTrajectories& tr,
                       const std::string& path, int s_stride) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw Error("cannot open " + path + " for writing");
  std::fprintf(f, "s,q,mu,Uq,U\n");
  for (std::size_t i = 0; i < tr.s.size(); i += s_stride) {
    for (std::size_t j = 0; j < tr.q.size(); ++j) {
      std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g\n", tr.s[i], tr.q[j],
                   tr.at_mu(i, j), tr.at_uq(i, j), state.U(tr.s[i], tr.q[j]));
    }
  }
  std::fclose(f);
}

}  // namespace qlw
