#include "qlw/eikonal.hpp"

#include <cmath>

#include "qlw/ode45.hpp"

namespace qlw {

EikonalSolver::EikonalSolver(EikonalConfig cfg, const Metric& metric,
                             ScatteringData data)
    : cfg_(cfg), metric_(metric), data_(data),
      state_(data, metric, cfg.omega, /*quad_tol=*/std::min(1e-10, cfg.ode_tol)) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
    throw DomainError("eikonal: epsilon must lie in (0,1)");
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
    throw DomainError("eikonal: delta must lie in (0,1)");
  if (std::abs(cfg.omega.norm() - 1.0) > 1e-12)
    throw DomainError("eikonal: omega must be a unit vector");
  if (!(cfg.ode_tol > 0.0)) throw DomainError("eikonal: ode_tol must be positive");
}

double EikonalSolver::slow_time(double t) const {
  return cfg_.epsilon * std::log(t) - cfg_.delta;
}

EikonalSolver::CharResult EikonalSolver::integrate_char(double t, double r,
                                                        const AsymptoticState& st,
                                                        bool want_nu) const {
  if (!(t > 0.0) || r < 0.0) throw DomainError("eikonal: requires t > 0 and r >= 0");
  const double R = st.R();
  if (r <= t - R || st.data().vanishes()) return {r - t, 0.0};

  // Start on the characteristic where it is still exactly linear: at
  // tau = t1 = (t+r+R)/2 with q = -R, or at the foot (r+t, -(r+t)) when the
  // whole characteristic is shorter than the support radius.
  double tau_start, z_start;
  if (r + t >= R) {
    tau_start = 0.5 * (t + r + R);
    z_start = -R;
  } else {
    tau_start = r + t;
    z_start = -(r + t);
  }

  const double eps = cfg_.epsilon, delta = cfg_.delta, G = st.G();
  auto s_of = [&](double tau) { return eps * std::log(tau) - delta; };

  if (want_nu) {
    auto f = [&](double tau, const State<2>& y) -> State<2> {
      double s = s_of(tau);
      double a, aq;
      st.A_pair(y[0], a, aq);
      double m = -2.0 * std::exp(0.5 * G * a * s);
      double mq = 0.5 * G * aq * s * m;
      return {m, mq * y[1] + 0.5 * eps / tau * G * a * m};
    };
    auto past_band = [R](double, const State<2>& y) { return y[0] >= R; };
    auto res = rk45_integrate<2>(f, tau_start, t, {z_start, 0.0}, cfg_.ode_tol,
                                 cfg_.max_steps, past_band, R);
    double q = res.y[0];
    if (res.halted) q += 2.0 * (res.t - t);  // exactly linear once q >= R
    return {q, res.y[1]};
  }

  auto f = [&](double tau, const State<1>& y) -> State<1> {
    return {-2.0 * std::exp(0.5 * G * st.A(y[0]) * s_of(tau))};
  };
  auto past_band = [R](double, const State<1>& y) { return y[0] >= R; };
  auto res = rk45_integrate<1>(f, tau_start, t, {z_start}, cfg_.ode_tol,
                               cfg_.max_steps, past_band, R);
  double q = res.y[0];
  if (res.halted) q += 2.0 * (res.t - t);
  return {q, 0.0};
}

OpticalSample EikonalSolver::sample(double t, double r) const {
  CharResult cr = integrate_char(t, r, state_, true);
  OpticalSample out;
  out.q = cr.q;
  out.nu = cr.nu;
  out.mu = state_.mu(slow_time(t), cr.q);
  out.q_t = 0.5 * (out.mu + out.nu);
  out.q_r = 0.5 * (out.nu - out.mu);
  out.t1 = 0.5 * (t + r + state_.R());
  if (cr.q > state_.R()) out.t0 = t + 0.5 * (cr.q - state_.R());
  if (!data_.angular_constant()) out.lambda = lambda_fd(t, r);
  return out;
}

double EikonalSolver::solve_q(double t, double r) const {
  return integrate_char(t, r, state_, false).q;
}

double EikonalSolver::solve_nu(double t, double r) const {
  return integrate_char(t, r, state_, true).nu;
}

double EikonalSolver::refined_nu_residual(double t, double r) const {
  CharResult cr = integrate_char(t, r, state_, true);
  double s = slow_time(t);
  double m = state_.mu(s, cr.q);
  return cr.nu + 0.25 * cfg_.epsilon * state_.G() / t * m * state_.U(s, cr.q);
}

Vec3 EikonalSolver::lambda_fd(double t, double r, double step) const {
  // The optical function is omega-independent when both the angular factor
  // and the null form are constant over the sphere.
  if (data_.angular_constant() && metric_.kind() == Metric::Kind::SoundSpeed)
    return {0.0, 0.0, 0.0};

  const Vec3 w = cfg_.omega;
  Vec3 e1 = std::abs(w.z) < 0.9 ? Vec3{-w.y, w.x, 0.0}.normalized()
                                : Vec3{1.0 - w.x * w.x, -w.x * w.y, -w.x * w.z}
                                      .normalized();
  Vec3 e2 = {w.y * e1.z - w.z * e1.y, w.z * e1.x - w.x * e1.z,
             w.x * e1.y - w.y * e1.x};

  auto q_at = [&](const Vec3& omega) {
    AsymptoticState st(data_, metric_, omega.normalized(), state_.quad_tol());
    return integrate_char(t, r, st, false).q;
  };

  Vec3 lam{0.0, 0.0, 0.0};
  for (const Vec3& e : {e1, e2}) {
    double c = std::cos(step), s = std::sin(step);
    double qp = q_at(c * w + s * e);
    double qm = q_at(c * w - s * e);
    double d = (qp - qm) / (2.0 * step) / r;
    lam = lam + d * e;
  }
  return lam;
}

double EikonalSolver::invert_q(double t, double q_target) const {
  if (q_target < -t) throw DomainError("invert_q: q_target must be >= -t");
  double lo = 0.0, hi = t + std::abs(q_target) + 10.0 * state_.R();
  double flo = solve_q(t, lo) - q_target;
  double fhi = solve_q(t, hi) - q_target;
  if (flo > 0.0 || fhi < 0.0)
    throw DomainError("invert_q: bracket not found in [0, t+|q|+10R]");
  double mid = lo, fmid = flo;
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    fmid = solve_q(t, mid) - q_target;
    if (std::abs(fmid) <= 1e-11) break;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
    if (hi - lo < 1e-13 * std::max(1.0, t)) break;
  }
  // Secant polish; monotonicity (q_r > 0) keeps this well-behaved.
  double r0 = lo, f0 = flo, r1 = mid, f1 = fmid;
  for (int i = 0; i < 4 && std::abs(f1) > 1e-12 && f1 != f0; ++i) {
    double r2 = r1 - f1 * (r1 - r0) / (f1 - f0);
    if (!(r2 >= 0.0)) break;
    r0 = r1;
    f0 = f1;
    r1 = r2;
    f1 = solve_q(t, r1) - q_target;
  }
  return std::abs(f1) <= std::abs(fmid) ? r1 : mid;
}

double EikonalSolver::band_outer_radius(double t) const {
  const double R = state_.R();
  if (state_.data().vanishes()) return t + R;
  const double G = state_.G();
  const double eps = cfg_.epsilon, delta = cfg_.delta;
  auto f = [&](double tau, const State<1>& y) -> State<1> {
    return {-2.0 * std::exp(0.5 * G * state_.A(y[0]) * (eps * std::log(tau) - delta))};
  };
  auto below_band = [R](double, const State<1>& y) { return y[0] <= -R; };
  // Chunked forward integration; the crossing takes O(R exp|GA s|/2) in tau.
  double tau = t;
  State<1> y = {R};
  for (int chunk = 0; chunk < 64; ++chunk) {
    auto res = rk45_integrate<1>(f, tau, tau + 4.0 * R, y, cfg_.ode_tol,
                                 cfg_.max_steps, below_band, 0.25 * R);
    if (res.halted) {
      double tau1 = res.t + 0.5 * (res.y[0] + R);  // exact linear tail below -R
      return 2.0 * tau1 - t - R;
    }
    tau = res.t;
    y = res.y;
  }
  throw NumericalError("band_outer_radius: characteristic did not cross the band",
                       y[0], t);
}

}  // namespace qlw
