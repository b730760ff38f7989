#include "qlw/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>

#include "nlohmann/json.hpp"
#include "qlw/smoothstep.hpp"

namespace fs = std::filesystem;

namespace qlw {

RadialGrid RadialGrid::make(double r_max, double h) {
  if (!(h > 0.0) || !(r_max > h)) throw DomainError("radial grid: bad extent");
  RadialGrid g;
  g.h = h;
  g.n = static_cast<int>(std::ceil(r_max / h)) + 1;
  return g;
}

double chi(double x) {
  return 1.0 - smoothstep(std::abs(x) - 1.0);
}

namespace {

// u_app data shared by every node at one stage time.  lap_A is the spatial
// part of the source: centered differences of the analytic first derivative
// plus the exact 2/r term, so the source and the v-stencils carry matching
// O(h^2) truncation.
struct Level {
  double t = 0.0;
  int j_lo = 1, j_hi = 0;  // empty when j_lo > j_hi
  std::vector<double> u_app, u_app_tt, lap_A;
  bool empty() const { return j_lo > j_hi; }
  double u_at(int j) const {
    return (j < j_lo || j > j_hi) ? 0.0 : u_app[j - j_lo];
  }
};

struct Engine {
  const SolveConfig& cfg;
  ProfileEvaluator prof;
  RadialGrid grid;
  double dt;
  double R;
  double theta;  // FD step for u_app_tt, keeps truncation at the grid's h^2
  std::deque<Level> cache;

  // Level evaluations only need to sit well below the grid truncation, so
  // the characteristic solves run at a capped tolerance.
  static EikonalConfig level_ecfg(EikonalConfig e) {
    e.ode_tol = std::max(e.ode_tol, 1e-9);
    return e;
  }

  explicit Engine(const SolveConfig& c)
      : cfg(c), prof(c.metric, c.data, level_ecfg(c.ecfg), c.pcfg) {
    if (c.metric.kind() != Metric::Kind::SoundSpeed)
      throw UnsupportedError("backward solve: SoundSpeed metric required");
    if (!c.data.angular_constant())
      throw UnsupportedError("backward solve: radial data required");
    R = c.data.R();
    if (!(c.h > 0.0) || c.h > R / 20.0 + 1e-12)
      throw DomainError("backward solve: grid must resolve the light cone (h <= R/20)");
    if (!(c.cfl > 0.0 && c.cfl < 1.0))
      throw DomainError("backward solve: cfl must lie in (0,1)");
    if (!(c.t_min >= 1.0) || !(c.T > c.t_min))
      throw DomainError("backward solve: need 1 <= t_min < T");
    double r_max = c.r_max > 0.0 ? c.r_max : 6.0 * c.T + 4.0 * R;
    if (r_max < 6.0 * c.T)
      throw DomainError("backward solve: r_max must cover the support (>= 6T)");
    grid = RadialGrid::make(r_max, c.h);
    // |c(u)|-1 stays far below the cfl headroom for any stable run; a
    // uniform dt keeps record lattices of different-T runs aligned.
    dt = c.cfl * c.h;
    theta = 0.7 * c.h;
  }

  const Level& level(double t) {
    for (const Level& L : cache)
      if (L.t == t) return L;
    cache.push_front(build_level(t));
    if (cache.size() > 6) cache.pop_back();
    return cache.front();
  }

  Level build_level(double t) const {
    Level L;
    L.t = t;
    if (cfg.data.vanishes() || t <= prof.T_R()) return L;
    const double h = grid.h;
    L.j_lo = std::max(1, static_cast<int>(std::floor((t - R) / h)) + 1);
    L.j_hi = std::min(grid.n - 2, static_cast<int>(std::ceil(1.5 * t / h)) - 1);
    if (L.j_lo > L.j_hi) return L;
    const int m = L.j_hi - L.j_lo + 1;

    double r_star = prof.eikonal().band_outer_radius(t) + 2.0 * h;
    const AsymptoticState& st = prof.state();
    const double sub_t[3] = {t, t + theta, t - theta};

    // Outer closed forms: past the band U(s,q) = U(s,R).
    double Ub[3], Ubs[3];
    for (int k = 0; k < 3; ++k) {
      Ub[k] = prof.outer_U(sub_t[k]);
      Ubs[k] = prof.outer_Us(sub_t[k]);
    }

    std::vector<std::array<ProfileEvaluator::Derivs, 3>> d(m);
    for (int k = 0; k < 3; ++k) {
      double tk = sub_t[k];
      double sk = prof.eikonal().slow_time(tk);
      double qprev = 0.0, Uprev = 0.0, Usprev = 0.0;
      bool chain = false;
      double seg_tol = st.quad_tol() * std::max(h / (2.0 * R), 1e-3);
      for (int j = L.j_lo; j <= L.j_hi; ++j) {
        double r = grid.r(j);
        if (r > r_star) {
          d[j - L.j_lo][k] = prof.u_app_derivs_outer(tk, r, Ub[k], Ubs[k]);
          continue;
        }
        OpticalSample o = prof.eikonal().sample(tk, r);
        ProfileEvaluator::PointEval p;
        p.q = o.q;
        p.nu = o.nu;
        p.mu = o.mu;
        p.Uq = st.Uq(sk, o.q);
        if (!chain) {
          p.U = st.U_between(sk, -R, o.q, st.quad_tol());
          p.Us = st.Us_between(sk, -R, o.q, st.quad_tol());
          chain = true;
        } else {
          p.U = Uprev + st.U_between(sk, qprev, o.q, seg_tol);
          p.Us = Usprev + st.Us_between(sk, qprev, o.q, seg_tol);
        }
        qprev = o.q;
        Uprev = p.U;
        Usprev = p.Us;
        d[j - L.j_lo][k] = prof.u_app_derivs_from(tk, r, p);
      }
    }

    L.u_app.resize(m);
    L.u_app_tt.resize(m);
    L.lap_A.resize(m);
    for (int i = 0; i < m; ++i) {
      L.u_app[i] = d[i][0].u;
      L.u_app_tt[i] = (d[i][1].u_t - d[i][2].u_t) / (2.0 * theta);
    }
    for (int i = 0; i < m; ++i) {
      double drm = (i > 0) ? d[i - 1][0].u_r : 0.0;      // u_app_r = 0 below t-R
      double drp = (i + 1 < m) ? d[i + 1][0].u_r : 0.0;  // and beyond 3t/2
      int j = L.j_lo + i;
      L.lap_A[i] = (drp - drm) / (2.0 * h) + 2.0 / grid.r(j) * d[i][0].u_r;
    }
    return L;
  }

  // Active window: continuum support [t-R, 6T-t] padded generously so the
  // (tiny) discrete leakage is evolved, not clipped.
  std::pair<int, int> window(double t) const {
    int pad = 64;
    int a = static_cast<int>(std::floor((t - R) / grid.h)) - pad;
    int b = static_cast<int>(std::ceil((6.0 * cfg.T - t) / grid.h)) + pad;
    return {std::max(1, a), std::min(grid.n - 2, b)};
  }

  void rhs(double t, const Level& L, const std::vector<double>& v,
           const std::vector<double>& vt, int ja, int jb, std::vector<double>& dv,
           std::vector<double>& dvt) const {
    const double h = grid.h;
    const double cchi = chi(t / cfg.T);
    const double cp = cfg.metric.c_prime0();
    for (int j = ja; j <= jb; ++j) {
      double lap = (v[j + 1] - 2.0 * v[j] + v[j - 1]) / (h * h) +
                   (v[j + 1] - v[j - 1]) / (h * grid.r(j));
      double u = v[j];
      double src = 0.0;
      if (j >= L.j_lo && j <= L.j_hi) {
        int i = j - L.j_lo;
        u += L.u_app[i];
        double c2 = 1.0 + cp * u;
        c2 *= c2;
        src = -cchi * (L.u_app_tt[i] - c2 * L.lap_A[i]);
        dvt[j] = c2 * lap + src;
      } else {
        double c2 = 1.0 + cp * u;
        dvt[j] = c2 * c2 * lap;
      }
      dv[j] = vt[j];
    }
  }
};

void axpy_window(std::vector<double>& out, const std::vector<double>& y, double a,
                 const std::vector<double>& k, int ja, int jb) {
  for (int j = ja; j <= jb; ++j) out[j] = y[j] + a * k[j];
}

}  // namespace

SolveResult backward_solve(const SolveConfig& cfg) {
  Engine eng(cfg);
  SolveResult res;
  res.grid = eng.grid;
  res.dt = eng.dt;

  const int n = eng.grid.n;
  const double dt = eng.dt;
  const double t_top = 2.0 * cfg.T;
  const long n_steps = std::lround((t_top - cfg.t_min) / dt);

  std::vector<long> rec_steps;
  for (double tr : cfg.record_times) {
    long m = std::lround((t_top - tr) / dt);
    if (m >= 0 && m <= n_steps) rec_steps.push_back(m);
  }
  std::sort(rec_steps.begin(), rec_steps.end());
  rec_steps.erase(std::unique(rec_steps.begin(), rec_steps.end()), rec_steps.end());

  std::vector<double> v(n, 0.0), vt(n, 0.0);
  std::vector<double> k1v(n, 0.0), k1t(n, 0.0), k2v(n, 0.0), k2t(n, 0.0), k3v(n, 0.0),
      k3t(n, 0.0), k4v(n, 0.0), k4t(n, 0.0), tv(n, 0.0), tt(n, 0.0);

  auto leak = [&](double t) {
    double mx = 0.0, out = 0.0;
    for (int j = 0; j < n; ++j) {
      double a = std::abs(v[j]);
      mx = std::max(mx, a);
      double r = eng.grid.r(j);
      if (r < t - eng.R - 2.0 * eng.grid.h || r + t > 6.0 * cfg.T + 2.0 * eng.grid.h)
        out = std::max(out, a);
    }
    return mx > 0.0 ? out / mx : 0.0;
  };

  auto record = [&](double t) {
    Slice s;
    s.t = t;
    s.v = v;
    s.v_t = vt;
    res.slices.push_back(std::move(s));
    res.support_leak_rel.push_back(leak(t));
  };

  long hist_stride = std::max(1L, n_steps / 1000);
  if (std::find(rec_steps.begin(), rec_steps.end(), 0L) != rec_steps.end())
    record(t_top);

  for (long m = 1; m <= n_steps; ++m) {
    double t_hi = t_top - (m - 1) * dt;
    double t_lo = t_top - m * dt;
    double t_mid = t_hi - 0.5 * dt;
    auto [ja, jb] = eng.window(t_lo);
    const Level& L1 = eng.level(t_hi);
    eng.rhs(t_hi, L1, v, vt, ja, jb, k1v, k1t);
    axpy_window(tv, v, -0.5 * dt, k1v, ja, jb);
    axpy_window(tt, vt, -0.5 * dt, k1t, ja, jb);
    const Level& L2 = eng.level(t_mid);
    eng.rhs(t_mid, L2, tv, tt, ja, jb, k2v, k2t);
    axpy_window(tv, v, -0.5 * dt, k2v, ja, jb);
    axpy_window(tt, vt, -0.5 * dt, k2t, ja, jb);
    eng.rhs(t_mid, eng.level(t_mid), tv, tt, ja, jb, k3v, k3t);
    axpy_window(tv, v, -dt, k3v, ja, jb);
    axpy_window(tt, vt, -dt, k3t, ja, jb);
    const Level& L3 = eng.level(t_lo);
    eng.rhs(t_lo, L3, tv, tt, ja, jb, k4v, k4t);

    double mx = 0.0;
    bool finite = true;
    for (int j = ja; j <= jb; ++j) {
      v[j] -= dt / 6.0 * (k1v[j] + 2.0 * k2v[j] + 2.0 * k3v[j] + k4v[j]);
      vt[j] -= dt / 6.0 * (k1t[j] + 2.0 * k2t[j] + 2.0 * k3t[j] + k4t[j]);
      double a = std::abs(v[j]);
      if (!std::isfinite(a) || !std::isfinite(vt[j])) finite = false;
      mx = std::max(mx, a);
    }
    res.cert.max_abs_v = std::max(res.cert.max_abs_v, mx);
    if (!finite) {
      res.cert.completed = false;
      res.cert.last_stable_t = t_hi;
      res.cert.abort_reason =
          "non-finite field values; rerun with smaller cfl or finer grid";
      return res;
    }
    if (m % hist_stride == 0) res.cert.history.emplace_back(t_lo, mx);
    for (long rs : rec_steps)
      if (rs == m) {
        record(t_lo);
        break;
      }
  }
  res.cert.completed = true;
  res.cert.last_stable_t = cfg.t_min;
  std::reverse(res.slices.begin(), res.slices.end());
  std::reverse(res.support_leak_rel.begin(), res.support_leak_rel.end());
  return res;
}

Slice forward_evolve(const SolveConfig& cfg, const Slice& start, double t_end) {
  Engine eng(cfg);
  const int n = eng.grid.n;
  if (static_cast<int>(start.v.size()) != n)
    throw ContractViolation("forward_evolve: slice does not match the grid");
  const double dt = eng.dt;
  const long n_steps = std::lround((t_end - start.t) / dt);
  std::vector<double> v = start.v, vt = start.v_t;
  std::vector<double> k1v(n, 0.0), k1t(n, 0.0), k2v(n, 0.0), k2t(n, 0.0), k3v(n, 0.0),
      k3t(n, 0.0), k4v(n, 0.0), k4t(n, 0.0), tv(n, 0.0), tt(n, 0.0);
  for (long m = 0; m < n_steps; ++m) {
    double t_lo = start.t + m * dt;
    double t_mid = t_lo + 0.5 * dt;
    double t_hi = t_lo + dt;
    auto [ja, jb] = eng.window(t_lo);
    eng.rhs(t_lo, eng.level(t_lo), v, vt, ja, jb, k1v, k1t);
    axpy_window(tv, v, 0.5 * dt, k1v, ja, jb);
    axpy_window(tt, vt, 0.5 * dt, k1t, ja, jb);
    eng.rhs(t_mid, eng.level(t_mid), tv, tt, ja, jb, k2v, k2t);
    axpy_window(tv, v, 0.5 * dt, k2v, ja, jb);
    axpy_window(tt, vt, 0.5 * dt, k2t, ja, jb);
    eng.rhs(t_mid, eng.level(t_mid), tv, tt, ja, jb, k3v, k3t);
    axpy_window(tv, v, dt, k3v, ja, jb);
    axpy_window(tt, vt, dt, k3t, ja, jb);
    eng.rhs(t_hi, eng.level(t_hi), tv, tt, ja, jb, k4v, k4t);
    for (int j = ja; j <= jb; ++j) {
      v[j] += dt / 6.0 * (k1v[j] + 2.0 * k2v[j] + 2.0 * k3v[j] + k4v[j]);
      vt[j] += dt / 6.0 * (k1t[j] + 2.0 * k2t[j] + 2.0 * k3t[j] + k4t[j]);
    }
  }
  Slice out;
  out.t = t_end;
  out.v = std::move(v);
  out.v_t = std::move(vt);
  return out;
}

double residual_check(const SolveConfig& cfg, const RadialGrid& grid,
                      const Slice& slice) {
  Engine eng(cfg);
  if (grid.n != eng.grid.n || grid.h != eng.grid.h)
    throw ContractViolation("residual_check: slice grid does not match config");
  const Level L = eng.build_level(slice.t);
  if (L.empty()) {
    // No u_app support: v solves the homogeneous scheme exactly.
    return 0.0;
  }
  const double h = grid.h;
  const double cchi = chi(slice.t / cfg.T);
  const double cp = cfg.metric.c_prime0();
  double worst = 0.0;
  for (int j = L.j_lo; j <= L.j_hi; ++j) {
    double lap_v = (slice.v[j + 1] - 2.0 * slice.v[j] + slice.v[j - 1]) / (h * h) +
                   (slice.v[j + 1] - slice.v[j - 1]) / (h * grid.r(j));
    double lap_uapp = (L.u_at(j + 1) - 2.0 * L.u_at(j) + L.u_at(j - 1)) / (h * h) +
                      (L.u_at(j + 1) - L.u_at(j - 1)) / (h * grid.r(j));
    int i = j - L.j_lo;
    double u = slice.v[j] + L.u_app[i];
    double c2 = 1.0 + cp * u;
    c2 *= c2;
    double src = -cchi * (L.u_app_tt[i] - c2 * L.lap_A[i]);
    double v_tt = c2 * lap_v + src;
    double resid = L.u_app_tt[i] + v_tt - c2 * (lap_uapp + lap_v);
    worst = std::max(worst, std::abs(resid));
  }
  return worst;
}

void write_slices(const std::string& dir, const SolveConfig& cfg,
                  const SolveResult& res) {
  fs::create_directories(dir);
  nlohmann::json man;
  man["T"] = cfg.T;
  man["epsilon"] = cfg.ecfg.epsilon;
  man["delta"] = cfg.ecfg.delta;
  man["h"] = res.grid.h;
  man["dt"] = res.dt;
  man["n"] = res.grid.n;
  man["t_min"] = cfg.t_min;
  man["amplitude"] = cfg.data.amplitude();
  man["R"] = cfg.data.R();
  std::vector<double> times;
  for (const Slice& s : res.slices) times.push_back(s.t);
  man["times"] = times;
  man["completed"] = res.cert.completed;
  man["max_abs_v"] = res.cert.max_abs_v;
  man["support_leak_rel"] = res.support_leak_rel;

  for (std::size_t i = 0; i < res.slices.size(); ++i) {
    const Slice& s = res.slices[i];
    std::string tmp = dir + "/.slice_" + std::to_string(i) + ".tmp";
    std::FILE* f = std::fopen(tmp.c_str(), "w");
    if (!f) throw Error("cannot open " + tmp);
    std::fprintf(f, "r,v,v_t\n");
    for (int j = 0; j < res.grid.n; ++j)
      std::fprintf(f, "%.17g,%.17g,%.17g\n", res.grid.r(j), s.v[j], s.v_t[j]);
    std::fclose(f);
    fs::rename(tmp, dir + "/slice_" + std::to_string(i) + ".csv");
  }
  std::string tmp = dir + "/.manifest.tmp";
  std::ofstream o(tmp);
  o << man.dump(2) << "\n";
  o.close();
  fs::rename(tmp, dir + "/manifest.json");
}

LoadedRun load_slices(const std::string& dir) {
  std::ifstream mi(dir + "/manifest.json");
  if (!mi) throw Error("missing manifest in " + dir + "; run cmd_solve first");
  nlohmann::json man = nlohmann::json::parse(mi);
  LoadedRun run;
  run.T = man["T"];
  run.epsilon = man["epsilon"];
  run.delta = man["delta"];
  run.h = man["h"];
  run.res.dt = man["dt"];
  run.res.grid.h = run.h;
  run.res.grid.n = man["n"];
  run.res.cert.completed = man["completed"];
  run.res.cert.max_abs_v = man["max_abs_v"];
  run.res.support_leak_rel = man["support_leak_rel"].get<std::vector<double>>();
  std::vector<double> times = man["times"].get<std::vector<double>>();
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::ifstream f(dir + "/slice_" + std::to_string(i) + ".csv");
    if (!f) throw Error("missing slice file in " + dir + "; run cmd_solve first");
    std::string line;
    std::getline(f, line);  // header
    Slice s;
    s.t = times[i];
    s.v.reserve(run.res.grid.n);
    while (std::getline(f, line)) {
      double r, v, vt;
      if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &r, &v, &vt) == 3) {
        s.v.push_back(v);
        s.v_t.push_back(vt);
      }
    }
    run.res.slices.push_back(std::move(s));
  }
  return run;
}

}  // namespace qlw
