#include "qlw/profile.hpp"

#include <algorithm>
#include <cmath>

#include "qlw/smoothstep.hpp"

namespace qlw {

double ProfileEvaluator::default_T_R(double epsilon, double delta, double R) {
  double activation = std::exp((delta + 0.1) / epsilon);
  return std::max(4.0 * R, std::min(activation, 20.0));
}

ProfileEvaluator::ProfileEvaluator(const Metric& metric, ScatteringData data,
                                   EikonalConfig ecfg, ProfileConfig pcfg)
    : metric_(metric), eik_(ecfg, metric, std::move(data)),
      T_R_(pcfg.T_R > 0.0 ? pcfg.T_R
                          : default_T_R(ecfg.epsilon, ecfg.delta,
                                        eik_.state().R())),
      fd_step_(pcfg.fd_step) {
  if (T_R_ <= 0.0 || fd_step_ <= 0.0)
    throw DomainError("profile: T_R and fd_step must be positive");
}

double ProfileEvaluator::psi(double x) {
  double w = psi_band[1] - psi_band[0];
  return smoothstep4((x - psi_band[0]) / w) - smoothstep4((x - psi_band[2]) / w);
}

double ProfileEvaluator::psi_d1(double x) {
  double w = psi_band[1] - psi_band[0];
  return (smoothstep4_d1((x - psi_band[0]) / w) - smoothstep4_d1((x - psi_band[2]) / w)) /
         w;
}

double ProfileEvaluator::psi_d2(double x) {
  double w = psi_band[1] - psi_band[0];
  return (smoothstep4_d2((x - psi_band[0]) / w) - smoothstep4_d2((x - psi_band[2]) / w)) /
         (w * w);
}

double ProfileEvaluator::eta(double t) const {
  return smoothstep4((t - T_R_) / T_R_);
}

double ProfileEvaluator::eta_d1(double t) const {
  return smoothstep4_d1((t - T_R_) / T_R_) / T_R_;
}

double ProfileEvaluator::eval_U(double t, double r) const {
  if (!(t > 0.0)) throw DomainError("eval_U: t must be positive");
  if (r <= t - eik_.state().R()) return 0.0;
  double q = eik_.solve_q(t, r);
  return eik_.state().U(eik_.slow_time(t), q);
}

double ProfileEvaluator::eval_u_app(double t, double r) const {
  if (t < 0.0 || r < 0.0) throw DomainError("eval_u_app: t and r must be nonnegative");
  if (t <= T_R_) return 0.0;
  double x = r / t;
  if (x <= psi_band[0] || x >= psi_band[3]) return 0.0;
  if (r <= t - eik_.state().R()) return 0.0;
  double q = eik_.solve_q(t, r);
  double U = eik_.state().U(eik_.slow_time(t), q);
  return epsilon() / r * eta(t) * psi(x) * U;
}

ProfileEvaluator::Derivs ProfileEvaluator::u_app_derivs(double t, double r) const {
  if (t <= T_R_) return {};
  double x = r / t;
  if (x <= psi_band[0] || x >= psi_band[3] || r <= t - eik_.state().R()) return {};
  OpticalSample o = eik_.sample(t, r);
  double s = eik_.slow_time(t);
  const AsymptoticState& st = eik_.state();
  PointEval p;
  p.q = o.q;
  p.nu = o.nu;
  p.mu = o.mu;
  p.U = st.U(s, o.q);
  p.Uq = st.Uq(s, o.q);
  p.Us = st.Us(s, o.q);
  return u_app_derivs_from(t, r, p);
}

ProfileEvaluator::Derivs ProfileEvaluator::u_app_derivs_from(double t, double r,
                                                             const PointEval& p) const {
  Derivs d;
  if (t <= T_R_) return d;
  double x = r / t;
  if (x <= psi_band[0] || x >= psi_band[3]) return d;
  double eps = epsilon();
  double e = eta(t), e1 = eta_d1(t);
  double ps = psi(x), ps1 = psi_d1(x);
  double q_t = 0.5 * (p.mu + p.nu), q_r = 0.5 * (p.nu - p.mu);
  double pre = eps / r;
  d.u = pre * e * ps * p.U;
  d.u_t = pre * (e1 * ps * p.U - e * ps1 * (x / t) * p.U +
                 e * ps * (p.Us * eps / t + p.Uq * q_t));
  d.u_r = -pre / r * e * ps * p.U +
          pre * (e * ps1 / t * p.U + e * ps * p.Uq * q_r);
  return d;
}

double ProfileEvaluator::du_app_minus(double t, double r) const {
  if (t <= T_R_) return 0.0;
  double x = r / t;
  if (x <= psi_band[0] || x >= psi_band[3] || r <= t - eik_.state().R()) return 0.0;
  OpticalSample o = eik_.sample(t, r);
  double s = eik_.slow_time(t);
  const AsymptoticState& st = eik_.state();
  double U = st.U(s, o.q), Uq = st.Uq(s, o.q), Us = st.Us(s, o.q);
  double eps = epsilon();
  double e = eta(t), e1 = eta_d1(t);
  double ps = psi(x), ps1 = psi_d1(x);
  double pre = eps / r;
  return pre * e * ps * (o.mu * Uq + eps * Us / t) + pre * e1 * ps * U -
         pre * e * ps1 * U * (x / t + 1.0 / t) + pre / r * e * ps * U;
}

double ProfileEvaluator::scattering_identity_residual(double t, double r) const {
  if (t <= T_R_) return 0.0;
  double d = du_app_minus(t, r);
  double a = 0.0;
  if (r > t - eik_.state().R()) {
    double q = eik_.solve_q(t, r);
    a = eik_.state().A(q);
  }
  return d + 2.0 * epsilon() / r * psi(r / t) * a;
}

double ProfileEvaluator::eikonal_residual(double t, double r) const {
  if (!(t > 0.0) || !(r > 0.0))
    throw DomainError("eikonal_residual: t and r must be positive");
  OpticalSample o = eik_.sample(t, r);
  double U = eik_.state().U(eik_.slow_time(t), o.q);
  double up = epsilon() / r * U;
  Mat4 g = metric_.kind() == Metric::Kind::SoundSpeed ? metric_.gtilde(up)
                                                      : metric_.gtilde_linearized(up);
  const Vec3& w = eik_.config().omega;
  std::array<double, 4> dq = {o.q_t, o.lambda.x + w.x * o.q_r,
                              o.lambda.y + w.y * o.q_r, o.lambda.z + w.z * o.q_r};
  return g.contract(dq);
}

double ProfileEvaluator::pde_residual(double t, double r) const {
  if (r < 1e-6) throw DomainError("pde_residual: r too close to the origin");
  if (metric_.kind() != Metric::Kind::SoundSpeed)
    throw UnsupportedError("pde_residual: radial form requires the SoundSpeed model");
  double step = fd_step_ * std::sqrt(std::max(1.0, t)) * 1e-3;
  Derivs c = u_app_derivs(t, r);
  double u_tt = (u_app_derivs(t + step, r).u_t - u_app_derivs(t - step, r).u_t) /
                (2.0 * step);
  double u_rr = (u_app_derivs(t, r + step).u_r - u_app_derivs(t, r - step).u_r) /
                (2.0 * step);
  double cs = metric_.sound_speed_at(c.u);
  return u_tt - cs * cs * (u_rr + 2.0 / r * c.u_r);
}

double ProfileEvaluator::outer_U(double t) const {
  const AsymptoticState& st = eik_.state();
  return st.U(eik_.slow_time(t), st.R());
}

double ProfileEvaluator::outer_Us(double t) const {
  const AsymptoticState& st = eik_.state();
  return st.Us(eik_.slow_time(t), st.R());
}

ProfileEvaluator::Derivs ProfileEvaluator::u_app_derivs_outer(double t, double r,
                                                              double Ub,
                                                              double Ubs) const {
  // q >= R: U is constant in q, so no characteristic solve is needed.
  Derivs d;
  if (t <= T_R_) return d;
  double x = r / t;
  if (x <= psi_band[0] || x >= psi_band[3]) return d;
  double eps = epsilon();
  double e = eta(t), e1 = eta_d1(t);
  double ps = psi(x), ps1 = psi_d1(x);
  double pre = eps / r;
  d.u = pre * e * ps * Ub;
  d.u_t = pre * (e1 * ps * Ub - e * ps1 * (x / t) * Ub + e * ps * Ubs * eps / t);
  d.u_r = -pre / r * e * ps * Ub + pre * e * ps1 / t * Ub;
  return d;
}

}  // namespace qlw
