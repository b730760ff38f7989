#include "qlw/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace qlw {

DecayFit fit_decay(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 4)
    throw DomainError("fit_decay: need at least 4 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [t, v] : samples) {
    if (!(t > 0.0) || !(v > 0.0))
      throw DomainError("fit_decay: samples must be positive");
    double x = std::log(t), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(samples.size());
  DecayFit fit;
  fit.samples = samples;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  for (auto [t, v] : samples) {
    double res = std::abs(std::log(v) - (fit.intercept + fit.slope * std::log(t)));
    fit.max_residual = std::max(fit.max_residual, res);
  }
  return fit;
}

double ghost_weight(const EnergyConfig& ecfg, double t, double q) {
  double sigma = std::pow(ecfg.R + q + 1.0, -1.0 / 16.0);
  return std::exp(ecfg.c0 * ecfg.epsilon * std::log(t) * sigma);
}

namespace {

std::vector<double> central_dr(const std::vector<double>& f, double h) {
  std::vector<double> d(f.size(), 0.0);
  for (std::size_t j = 1; j + 1 < f.size(); ++j) d[j] = (f[j + 1] - f[j - 1]) / (2 * h);
  if (f.size() >= 3) {
    d[0] = (-3 * f[0] + 4 * f[1] - f[2]) / (2 * h);
    std::size_t n = f.size();
    d[n - 1] = (3 * f[n - 1] - 4 * f[n - 2] + f[n - 3]) / (2 * h);
  }
  return d;
}

}  // namespace

double weighted_energy(const EnergyConfig& ecfg, const Metric& metric,
                       const EikonalSolver& eik, const RadialField& u_slice,
                       const RadialField& phi, const RadialField& phi_t) {
  const RadialGrid& g = phi.grid;
  if (u_slice.grid.n != g.n || phi_t.grid.n != g.n || u_slice.grid.h != g.h ||
      phi_t.grid.h != g.h)
    throw ContractViolation("weighted_energy: slices must share one grid");
  if (u_slice.t != phi.t || phi_t.t != phi.t)
    throw ContractViolation("weighted_energy: slices must share one time stamp");
  const double t = phi.t;
  for (int j = 0; j < g.n; ++j)
    if (g.r(j) < t - ecfg.R && std::abs(phi.values[j]) > 1e-10)
      throw ContractViolation("weighted_energy: phi must vanish for r < t - R");

  std::vector<double> dphi = central_dr(phi.values, g.h);
  double acc = 0.0;
  for (int j = 0; j < g.n; ++j) {
    double r = g.r(j);
    double w = 1.0;
    if (r >= t - ecfg.R && ecfg.epsilon != 0.0)
      w = ghost_weight(ecfg, t, eik.solve_q(t, r));
    double c = metric.kind() == Metric::Kind::SoundSpeed
                   ? metric.sound_speed_at(u_slice.values[j])
                   : 1.0;
    double integrand =
        w * (phi_t.values[j] * phi_t.values[j] + c * c * dphi[j] * dphi[j]) * r * r;
    acc += (j == 0 || j == g.n - 1) ? 0.5 * integrand : integrand;
  }
  return 4.0 * M_PI * acc * g.h;
}

double poincare_flat(const RadialField& phi, double t) {
  const RadialGrid& g = phi.grid;
  std::vector<double> dphi = central_dr(phi.values, g.h);
  double lhs = 0.0, rhs = 0.0;
  for (int j = 0; j < g.n; ++j) {
    double r = g.r(j);
    double wq = 1.0 / (1.0 + (t - r) * (t - r));
    double scale = (j == 0 || j == g.n - 1) ? 0.5 : 1.0;
    lhs += scale * wq * phi.values[j] * phi.values[j] * r * r;
    rhs += scale * dphi[j] * dphi[j] * r * r;
  }
  if (rhs == 0.0) throw DomainError("poincare_flat: zero gradient (degenerate input)");
  return lhs / rhs;
}

double poincare_weighted(const EnergyConfig& ecfg, const EikonalSolver& eik,
                         const RadialField& phi, double t) {
  const RadialGrid& g = phi.grid;
  for (int j = 0; j < g.n; ++j)
    if (g.r(j) < t - ecfg.R && std::abs(phi.values[j]) > 1e-10)
      throw ContractViolation("poincare_weighted: phi must vanish for r < t - R");
  std::vector<double> dphi = central_dr(phi.values, g.h);
  double lhs = 0.0, rhs = 0.0;
  for (int j = 0; j < g.n; ++j) {
    double r = g.r(j);
    if (r < t - ecfg.R) continue;
    OpticalSample o = eik.sample(t, r);
    double w = ghost_weight(ecfg, t, o.q);
    double br = 1.0 + o.q * o.q;
    double scale = (j == 0 || j == g.n - 1) ? 0.5 : 1.0;
    lhs += scale * phi.values[j] * phi.values[j] * o.q_r * o.q_r / br * w * r * r;
    rhs += scale * dphi[j] * dphi[j] * w * r * r;
  }
  if (rhs == 0.0)
    throw DomainError("poincare_weighted: zero gradient (degenerate input)");
  return lhs / rhs;
}

double grad_l2(const RadialGrid& grid, const Slice& s, double r_cap) {
  std::vector<double> dv = central_dr(s.v, grid.h);
  double acc = 0.0;
  for (int j = 0; j < grid.n; ++j) {
    double r = grid.r(j);
    if (r_cap > 0.0 && r > r_cap) break;
    double scale = (j == 0 || j == grid.n - 1) ? 0.5 : 1.0;
    acc += scale * (s.v_t[j] * s.v_t[j] + dv[j] * dv[j]) * r * r;
  }
  return std::sqrt(4.0 * M_PI * acc * grid.h);
}

std::vector<double> common_record_times(const SolveResult& run1,
                                        const SolveResult& run2, double tol) {
  std::vector<double> out;
  for (const Slice& a : run1.slices)
    for (const Slice& b : run2.slices)
      if (std::abs(a.t - b.t) <= tol) {
        out.push_back(a.t);
        break;
      }
  return out;
}

double compare_vT(const SolveResult& run1, const SolveResult& run2,
                  const std::vector<double>& common_times) {
  if (run1.grid.n != run2.grid.n || run1.grid.h != run2.grid.h)
    throw ContractViolation("compare_vT: runs must share the grid");
  const double tol = 0.5 * std::min(run1.dt, run2.dt);
  double sup = 0.0;
  for (double t : common_times) {
    const Slice* s1 = nullptr;
    const Slice* s2 = nullptr;
    for (const Slice& s : run1.slices)
      if (std::abs(s.t - t) <= tol) s1 = &s;
    for (const Slice& s : run2.slices)
      if (std::abs(s.t - t) <= tol) s2 = &s;
    if (!s1 || !s2)
      throw ContractViolation("compare_vT: requested time not recorded in both runs");
    Slice diff;
    diff.t = t;
    diff.v.resize(s1->v.size());
    diff.v_t.resize(s1->v.size());
    for (std::size_t j = 0; j < s1->v.size(); ++j) {
      diff.v[j] = s2->v[j] - s1->v[j];
      diff.v_t[j] = s2->v_t[j] - s1->v_t[j];
    }
    sup = std::max(sup, grad_l2(run1.grid, diff));
  }
  return sup;
}

ScatteringCheckResult scattering_check(const SolveResult& run, double T,
                                       const ProfileEvaluator& prof) {
  ScatteringCheckResult out;
  const EikonalSolver& eik = prof.eikonal();
  const AsymptoticState& st = prof.state();
  const double eps = prof.epsilon();
  const RadialGrid& g = run.grid;
  std::vector<std::pair<double, double>> pw, en;

  for (const Slice& s : run.slices) {
    if (s.t > 0.5 * T) continue;
    const double t = s.t;
    std::vector<double> dv = central_dr(s.v, g.h);

    // Pointwise bound on the radiation band |q| <= R.
    double r_lo = eik.invert_q(t, -st.R());
    double r_hi = eik.invert_q(t, st.R());
    int j_lo = std::max(1, static_cast<int>(std::ceil(r_lo / g.h)));
    int j_hi = std::min(g.n - 2, static_cast<int>(std::floor(r_hi / g.h)));
    double sup = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) {
      double r = g.r(j);
      double q = eik.solve_q(t, r);
      double val = prof.du_app_minus(t, r) + (s.v_t[j] - dv[j]) +
                   2.0 * eps / r * st.A(q);
      sup = std::max(sup, std::abs(val));
    }
    if (sup > 0.0) pw.emplace_back(t, sup);

    // Energy companion || d(u - eps U/r) ||_{L2(r <= 5t/4)}.
    double acc = 0.0;
    int j_cap = std::min(g.n - 2, static_cast<int>(1.25 * t / g.h));
    int j_start = std::max(1, static_cast<int>(std::floor((t - st.R()) / g.h)) - 4);
    double sk = eik.slow_time(t);
    for (int j = j_start; j <= j_cap; ++j) {
      double r = g.r(j);
      double gt = 0.0, gr = 0.0;  // d(u_app - eps U/r)
      if (r > t - st.R()) {
        OpticalSample o = eik.sample(t, r);
        double U = st.U(sk, o.q), Uq = st.Uq(sk, o.q), Us = st.Us(sk, o.q);
        ProfileEvaluator::PointEval p{o.q, o.nu, o.mu, U, Uq, Us};
        ProfileEvaluator::Derivs d = prof.u_app_derivs_from(t, r, p);
        gt = d.u_t - eps / r * (Us * eps / t + Uq * o.q_t);
        gr = d.u_r - (-eps / (r * r) * U + eps / r * Uq * o.q_r);
      }
      double ft = s.v_t[j] + gt;
      double fr = dv[j] + gr;
      acc += (ft * ft + fr * fr) * r * r;
    }
    double norm = std::sqrt(4.0 * M_PI * acc * g.h);
    if (norm > 0.0) en.emplace_back(t, norm);
  }
  if (pw.size() >= 4) out.pointwise = fit_decay(pw);
  else out.pointwise.samples = pw;
  if (en.size() >= 4) out.energy = fit_decay(en);
  else out.energy.samples = en;
  return out;
}

std::vector<std::pair<double, double>> energy_decay_samples(const SolveResult& run,
                                                            double t_lo, double t_hi) {
  std::vector<std::pair<double, double>> out;
  for (const Slice& s : run.slices) {
    if (s.t < t_lo - 1e-9 || s.t > t_hi + 1e-9) continue;
    double norm = grad_l2(run.grid, s);
    if (norm > 0.0) out.emplace_back(s.t, norm);
  }
  return out;
}

}  // namespace qlw
