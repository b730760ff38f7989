#include "qlw/general_reduced.hpp"

#include <algorithm>
#include <cmath>

#include "qlw/errors.hpp"

namespace qlw {

GeneralReducedState::GeneralReducedState(GeneralReducedModel model,
                                         const AsymptoticState& asym, int n_q)
    : model_(model) {
  double R = asym.R();
  if (n_q < 2 || (n_q - 1) * 1.0 < 16.0 * (2.0 * R) / (2.0 * R + 2.0))
    throw DomainError("general reduced: q grid too coarse to resolve A");
  q_.resize(n_q);
  mu_.assign(n_q, -2.0);
  uq_.resize(n_q);
  double lo = -R - 1.0, hi = R + 1.0;
  dq_ = (hi - lo) / (n_q - 1);
  for (int j = 0; j < n_q; ++j) {
    q_[j] = lo + j * dq_;
    uq_[j] = asym.A(q_[j]);
  }
}

std::vector<double> GeneralReducedState::u() const {
  // Cumulative Simpson from the left boundary; odd points by the 3-point
  // Newton-Cotes half-rule.
  const std::size_t n = q_.size();
  std::vector<double> u(n, 0.0);
  for (std::size_t j = 2; j < n; j += 2)
    u[j] = u[j - 2] + dq_ / 3.0 * (uq_[j - 2] + 4.0 * uq_[j - 1] + uq_[j]);
  for (std::size_t j = 1; j < n; j += 2) {
    if (j + 1 < n)
      u[j] = u[j - 1] + dq_ / 12.0 * (5.0 * uq_[j - 1] + 8.0 * uq_[j] - uq_[j + 1]);
    else
      u[j] = u[j - 1] + dq_ / 12.0 * (5.0 * uq_[j - 1] + 8.0 * uq_[j] - uq_[j - 2]);
  }
  return u;
}

namespace {

// 4th-order first and second derivatives on a uniform grid.
void deriv1(const std::vector<double>& f, double h, std::vector<double>& out) {
  const std::size_t n = f.size();
  out.resize(n);
  const double c = 1.0 / (12.0 * h);
  out[0] = c * (-25 * f[0] + 48 * f[1] - 36 * f[2] + 16 * f[3] - 3 * f[4]);
  out[1] = c * (-3 * f[0] - 10 * f[1] + 18 * f[2] - 6 * f[3] + f[4]);
  for (std::size_t j = 2; j + 2 < n; ++j)
    out[j] = c * (-f[j + 2] + 8 * f[j + 1] - 8 * f[j - 1] + f[j - 2]);
  out[n - 2] = -c * (-3 * f[n - 1] - 10 * f[n - 2] + 18 * f[n - 3] - 6 * f[n - 4] +
                     f[n - 5]);
  out[n - 1] = -c * (-25 * f[n - 1] + 48 * f[n - 2] - 36 * f[n - 3] + 16 * f[n - 4] -
                     3 * f[n - 5]);
}

}  // namespace

struct GeneralIntegrator {
  GeneralReducedState& st;
  std::vector<double> prod_q, uq, u;

  // State variables are mu and the product P = mu U_q.  By the product rule
  // the mu equation reads mu_s = -G2/4 mu P + G3/8 mu^2 P_q, and P_s is
  // spatially local, so grid-scale perturbations cannot feed back through
  // the stencils.  (Evolving (mu, U_q) with separate mu_q and U_qq stencils
  // is violently unstable: delta U_q acquires an anti-diffusive k^2 term.)
  void rhs(const std::vector<double>& mu, const std::vector<double>& prod,
           std::vector<double>& dmu, std::vector<double>& dprod) {
    const GeneralReducedModel& m = st.model_;
    const std::size_t n = mu.size();
    deriv1(prod, st.dq_, prod_q);
    if (m.f0 != 0.0 || m.F1 != 0.0) {
      uq.resize(n);
      for (std::size_t j = 0; j < n; ++j) uq[j] = prod[j] / mu[j];
      cumulative_u(uq);
    }
    dmu.resize(n);
    dprod.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      double M = mu[j], P = prod[j];
      dmu[j] = -0.25 * m.G2 * M * P + 0.125 * m.G3 * M * M * prod_q[j];
      double prod_s = 0.0;
      if (m.f0 != 0.0 || m.F1 != 0.0 || m.F2 != 0.0) {
        double Uj = (m.f0 != 0.0 || m.F1 != 0.0) ? u[j] : 0.0;
        prod_s = m.f0 * Uj * Uj - 0.5 * m.F1 * Uj * P + 0.25 * m.F2 * P * P;
      }
      dprod[j] = prod_s;
    }
  }

  void cumulative_u(const std::vector<double>& uq) {
    const std::size_t n = uq.size();
    u.assign(n, 0.0);
    for (std::size_t j = 2; j < n; j += 2)
      u[j] = u[j - 2] + st.dq_ / 3.0 * (uq[j - 2] + 4.0 * uq[j - 1] + uq[j]);
    for (std::size_t j = 1; j < n; j += 2)
      u[j] = u[j - 1] + st.dq_ / 12.0 *
                            (5.0 * uq[j - 1] + 8.0 * uq[j] -
                             (j + 1 < n ? uq[j + 1] : uq[j - 2]));
  }
};

GeneralRunResult integrate_general_reduced(GeneralReducedState& state, double s_max,
                                           double ds,
                                           const std::vector<double>& s_record,
                                           double blowup_threshold) {
  if (s_max <= 0.0 || ds <= 0.0)
    throw DomainError("general reduced: s_max and ds must be positive");

  GeneralRunResult res;
  res.q = state.q();
  const long n_steps = std::lround(s_max / ds);
  std::vector<long> record_steps;
  for (double sr : s_record)
    record_steps.push_back(std::min(n_steps, std::lround(sr / ds)));

  GeneralIntegrator integ{state, {}, {}, {}};
  const std::size_t n = state.q().size();
  std::vector<double> prod(n);
  for (std::size_t j = 0; j < n; ++j) prod[j] = state.mu_[j] * state.uq_[j];
  std::vector<double> k1m, k1u, k2m, k2u, k3m, k3u, k4m, k4u, tm(n), tu(n);

  auto finite_below = [&](const std::vector<double>& mu) {
    double mx = 0.0;
    for (double v : mu) {
      if (!std::isfinite(v)) return std::make_pair(false, mx);
      mx = std::max(mx, std::abs(v));
    }
    return std::make_pair(mx <= blowup_threshold, mx);
  };

  auto snapshot = [&](long step) {
    for (long rs : record_steps)
      if (rs == step) {
        GeneralSnapshot snap;
        snap.s = state.s();
        snap.mu = state.mu();
        snap.uq = state.uq();
        snap.u = state.u();
        res.snapshots.push_back(std::move(snap));
        break;
      }
  };

  snapshot(0);
  for (long i = 1; i <= n_steps; ++i) {
    integ.rhs(state.mu_, prod, k1m, k1u);
    for (std::size_t j = 0; j < n; ++j) {
      tm[j] = state.mu_[j] + 0.5 * ds * k1m[j];
      tu[j] = prod[j] + 0.5 * ds * k1u[j];
    }
    integ.rhs(tm, tu, k2m, k2u);
    for (std::size_t j = 0; j < n; ++j) {
      tm[j] = state.mu_[j] + 0.5 * ds * k2m[j];
      tu[j] = prod[j] + 0.5 * ds * k2u[j];
    }
    integ.rhs(tm, tu, k3m, k3u);
    for (std::size_t j = 0; j < n; ++j) {
      tm[j] = state.mu_[j] + ds * k3m[j];
      tu[j] = prod[j] + ds * k3u[j];
    }
    integ.rhs(tm, tu, k4m, k4u);
    for (std::size_t j = 0; j < n; ++j) {
      tm[j] = state.mu_[j] + ds / 6.0 * (k1m[j] + 2 * k2m[j] + 2 * k3m[j] + k4m[j]);
      tu[j] = prod[j] + ds / 6.0 * (k1u[j] + 2 * k2u[j] + 2 * k3u[j] + k4u[j]);
    }
    auto [ok, mx] = finite_below(tm);
    bool prod_ok = std::all_of(tu.begin(), tu.end(),
                               [](double v) { return std::isfinite(v); });
    if (!ok || !prod_ok) {
      res.report.blew_up = true;
      res.report.s_last_stable = state.s();
      res.report.max_abs_mu = mx;
      res.report.reason = (std::isfinite(mx) && prod_ok)
                              ? "max|mu| exceeded threshold"
                              : "non-finite field values (instability)";
      return res;
    }
    state.mu_.swap(tm);
    prod.swap(tu);
    for (std::size_t j = 0; j < n; ++j) state.uq_[j] = prod[j] / state.mu_[j];
    state.s_ = ds * i;
    snapshot(i);
  }
  auto [ok, mx] = finite_below(state.mu_);
  (void)ok;
  res.report.blew_up = false;
  res.report.s_last_stable = state.s();
  res.report.max_abs_mu = mx;
  return res;
}

}  // namespace qlw
