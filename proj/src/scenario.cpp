#include "qlw/scenario.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qlw {

namespace {

// Minimal TOML reader covering the scenario schema: [tables], key = value
// with strings, numbers, booleans and flat arrays, '#' comments.
struct TomlValue {
  enum class Kind { Str, Num, Bool, NumArray, StrArray } kind = Kind::Num;
  std::string s;
  double num = 0.0;
  bool b = false;
  std::vector<double> nums;
  std::vector<std::string> strs;
};

using TomlTable = std::map<std::string, TomlValue>;

std::string strip(const std::string& in) {
  std::size_t a = in.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = in.find_last_not_of(" \t\r");
  return in.substr(a, b - a + 1);
}

std::string drop_comment(const std::string& line) {
  bool in_str = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

TomlValue parse_value(const std::string& raw, int line_no) {
  TomlValue v;
  std::string s = strip(raw);
  if (s.empty())
    throw ConfigError("line " + std::to_string(line_no) + ": missing value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"')
      throw ConfigError("line " + std::to_string(line_no) + ": unterminated string");
    v.kind = TomlValue::Kind::Str;
    v.s = s.substr(1, s.size() - 2);
    return v;
  }
  if (s == "true" || s == "false") {
    v.kind = TomlValue::Kind::Bool;
    v.b = (s == "true");
    return v;
  }
  if (s.front() == '[') {
    if (s.back() != ']')
      throw ConfigError("line " + std::to_string(line_no) + ": unterminated array");
    std::string inner = s.substr(1, s.size() - 2);
    std::stringstream ss(inner);
    std::string item;
    bool strings = inner.find('"') != std::string::npos;
    v.kind = strings ? TomlValue::Kind::StrArray : TomlValue::Kind::NumArray;
    while (std::getline(ss, item, ',')) {
      item = strip(item);
      if (item.empty()) continue;
      if (strings) {
        TomlValue e = parse_value(item, line_no);
        v.strs.push_back(e.s);
      } else {
        char* end = nullptr;
        double d = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
          throw ConfigError("line " + std::to_string(line_no) + ": bad number '" +
                            item + "'");
        v.nums.push_back(d);
      }
    }
    return v;
  }
  char* end = nullptr;
  double d = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw ConfigError("line " + std::to_string(line_no) + ": bad value '" + s + "'");
  v.kind = TomlValue::Kind::Num;
  v.num = d;
  return v;
}

TomlTable parse_toml(std::istream& in) {
  TomlTable table;
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip(drop_comment(line));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ConfigError("line " + std::to_string(line_no) + ": bad table header");
      section = strip(s.substr(1, s.size() - 2));
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key = strip(s.substr(0, eq));
    if (key.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    std::string full = section.empty() ? key : section + "." + key;
    table[full] = parse_value(s.substr(eq + 1), line_no);
  }
  return table;
}

double get_num(const TomlTable& t, const std::string& key, double dflt) {
  auto it = t.find(key);
  if (it == t.end()) return dflt;
  if (it->second.kind != TomlValue::Kind::Num)
    throw ConfigError(key + ": expected a number");
  return it->second.num;
}

std::string get_str(const TomlTable& t, const std::string& key,
                    const std::string& dflt) {
  auto it = t.find(key);
  if (it == t.end()) return dflt;
  if (it->second.kind != TomlValue::Kind::Str)
    throw ConfigError(key + ": expected a string");
  return it->second.s;
}

}  // namespace

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file " + path);
  TomlTable t = parse_toml(in);
  Scenario sc;

  sc.metric_kind = get_str(t, "metric.kind", sc.metric_kind);
  sc.c_prime0 = get_num(t, "metric.c_prime0", sc.c_prime0);
  if (auto it = t.find("metric.g_lin"); it != t.end()) sc.g_lin = it->second.nums;

  sc.profile = get_str(t, "scattering.profile", sc.profile);
  sc.amplitude = get_num(t, "scattering.amplitude", sc.amplitude);
  sc.R = get_num(t, "scattering.R", sc.R);
  sc.angular = get_str(t, "scattering.angular", sc.angular);
  sc.angular_beta = get_num(t, "scattering.angular_beta", sc.angular_beta);

  sc.epsilon = get_num(t, "asymptotics.epsilon", sc.epsilon);
  sc.delta = get_num(t, "asymptotics.delta", sc.delta);
  sc.quad_tol = get_num(t, "asymptotics.quad_tol", sc.quad_tol);
  sc.ode_tol = get_num(t, "asymptotics.ode_tol", sc.ode_tol);
  if (auto it = t.find("asymptotics.omega"); it != t.end()) {
    if (it->second.nums.size() != 3)
      throw ConfigError("asymptotics.omega: expected three components");
    sc.omega = {it->second.nums[0], it->second.nums[1], it->second.nums[2]};
  }

  sc.T_R = get_num(t, "profile_eval.T_R", sc.T_R);
  sc.fd_step = get_num(t, "profile_eval.fd_step", sc.fd_step);

  if (auto it = t.find("solver.T"); it != t.end()) {
    if (it->second.kind == TomlValue::Kind::Num)
      sc.T_list = {it->second.num};
    else
      sc.T_list = it->second.nums;
  }
  sc.t_min = get_num(t, "solver.t_min", sc.t_min);
  sc.h = get_num(t, "solver.h", sc.R / 40.0);
  sc.cfl = get_num(t, "solver.cfl", sc.cfl);
  sc.r_max = get_num(t, "solver.r_max", sc.r_max);
  sc.record_ratio = get_num(t, "solver.record_ratio", sc.record_ratio);

  sc.c0 = get_num(t, "energy.c0", sc.c0);

  for (const auto& [key, val] : t) {
    if (key.rfind("checks.", 0) == 0) {
      if (val.kind != TomlValue::Kind::Bool)
        throw ConfigError(key + ": expected true or false");
      sc.checks[key.substr(7)] = val.b;
    } else if (key.rfind("tolerances.", 0) == 0) {
      if (val.kind != TomlValue::Kind::Num)
        throw ConfigError(key + ": expected a number");
      sc.tolerances[key.substr(11)] = val.num;
    }
  }

  sc.out_dir = get_str(t, "output.dir", sc.out_dir);
  sc.seed = static_cast<std::uint64_t>(get_num(t, "output.seed", 12345.0));
  sc.threads = static_cast<int>(get_num(t, "output.threads", 1.0));
  return sc;
}

double resolved_T_R(const Scenario& sc) {
  return sc.T_R > 0.0 ? sc.T_R
                      : ProfileEvaluator::default_T_R(sc.epsilon, sc.delta, sc.R);
}

double resolved_t_min(const Scenario& sc) {
  return sc.t_min > 0.0 ? sc.t_min : std::max(1.0, resolved_T_R(sc));
}

double resolved_r_max(const Scenario& sc) {
  if (sc.r_max > 0.0) return sc.r_max;
  double t_max = 0.0;
  for (double T : sc.T_list) t_max = std::max(t_max, T);
  return 6.0 * t_max + 4.0 * sc.R;
}

std::vector<std::string> validate_scenario(const Scenario& sc) {
  std::vector<std::string> notes;
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };

  if (sc.metric_kind != "sound_speed" && sc.metric_kind != "general_linearized")
    fail("metric.kind: must be 'sound_speed' or 'general_linearized'");
  if (sc.metric_kind == "general_linearized" && sc.g_lin.size() != 16)
    fail("metric.g_lin: expected 16 row-major entries");
  if (sc.profile != "bump" && sc.profile != "sine_bump" && sc.profile != "spline")
    fail("scattering.profile: must be 'bump', 'sine_bump' or 'spline'");
  if (sc.R < 1.0) fail("scattering.R: support radius must satisfy R >= 1");
  if (sc.angular != "none" && sc.angular != "linear_z")
    fail("scattering.angular: must be 'none' or 'linear_z'");
  if (!(sc.epsilon > 0.0 && sc.epsilon < 1.0))
    fail("asymptotics.epsilon: must lie in (0,1)");
  if (!(sc.delta > 0.0 && sc.delta < 1.0)) fail("asymptotics.delta: must lie in (0,1)");
  if (!(sc.quad_tol > 0.0)) fail("asymptotics.quad_tol: must be positive");
  if (!(sc.ode_tol > 0.0)) fail("asymptotics.ode_tol: must be positive");
  if (std::abs(sc.omega.norm() - 1.0) > 1e-12)
    fail("asymptotics.omega: must be a unit vector");
  if (sc.fd_step <= 0.0) fail("profile_eval.fd_step: must be positive");
  if (!(sc.cfl > 0.0 && sc.cfl < 1.0)) fail("solver.cfl: must lie in (0,1)");
  if (!(sc.h > 0.0)) fail("solver.h: must be positive");
  if (sc.h > sc.R / 20.0 + 1e-12)
    fail("solver.h: grid must resolve the light cone (h <= R/20)");
  if (sc.T_list.empty()) fail("solver.T: at least one cutoff time required");
  double t_min = resolved_t_min(sc);
  if (t_min < 1.0) fail("solver.t_min: must be >= 1");
  for (double T : sc.T_list)
    if (!(T > t_min)) fail("solver.T: every T must exceed t_min");
  double t_max = 0.0;
  for (double T : sc.T_list) t_max = std::max(t_max, T);
  if (resolved_r_max(sc) < 6.0 * t_max)
    fail("solver.r_max: must cover the propagation region (>= 6 max T)");
  if (!(sc.record_ratio > 1.0)) fail("solver.record_ratio: must exceed 1");
  if (!(sc.c0 > 0.0)) fail("energy.c0: must be positive");
  if (sc.threads < 1) fail("output.threads: must be >= 1");

  if (sc.T_R <= 0.0)
    notes.push_back("profile_eval.T_R defaulted to " +
                    std::to_string(resolved_T_R(sc)));
  if (sc.t_min <= 0.0)
    notes.push_back("solver.t_min defaulted to " + std::to_string(t_min));
  if (sc.r_max <= 0.0)
    notes.push_back("solver.r_max defaulted to " + std::to_string(resolved_r_max(sc)));
  return notes;
}

Metric make_metric(const Scenario& sc) {
  if (sc.metric_kind == "sound_speed") return Metric::sound_speed(sc.c_prime0);
  Mat4 g;
  for (int i = 0; i < 16; ++i) g.a[i] = sc.g_lin[i];
  return Metric::general_linearized(g);
}

ScatteringData make_data(const Scenario& sc) {
  ScatteringData::Profile p = ScatteringData::Profile::Bump;
  if (sc.profile == "sine_bump") p = ScatteringData::Profile::SineBump;
  if (sc.profile == "spline") p = ScatteringData::Profile::Spline;
  ScatteringData::Angular a = sc.angular == "linear_z"
                                  ? ScatteringData::Angular::LinearZ
                                  : ScatteringData::Angular::Constant;
  return ScatteringData(p, sc.amplitude, sc.R, a, sc.angular_beta);
}

EikonalConfig make_eikonal_config(const Scenario& sc) {
  EikonalConfig e;
  e.epsilon = sc.epsilon;
  e.delta = sc.delta;
  e.ode_tol = sc.ode_tol;
  e.omega = sc.omega;
  return e;
}

ProfileConfig make_profile_config(const Scenario& sc) {
  ProfileConfig p;
  p.T_R = resolved_T_R(sc);
  p.fd_step = sc.fd_step;
  return p;
}

SolveConfig make_solve_config(const Scenario& sc, double T) {
  SolveConfig c;
  c.T = T;
  c.t_min = resolved_t_min(sc);
  c.cfl = sc.cfl;
  c.h = sc.h;
  c.r_max = resolved_r_max(sc);
  c.metric = make_metric(sc);
  c.data = make_data(sc);
  c.ecfg = make_eikonal_config(sc);
  c.pcfg = make_profile_config(sc);
  c.record_times = record_times(sc, T);
  return c;
}

EnergyConfig make_energy_config(const Scenario& sc) {
  EnergyConfig e;
  e.c0 = sc.c0;
  e.epsilon = sc.epsilon;
  e.delta = sc.delta;
  e.R = sc.R;
  return e;
}

std::vector<double> record_times(const Scenario& sc, double T) {
  std::vector<double> out;
  double t = resolved_T_R(sc);
  while (t < 2.0 * T - 1e-9) {
    out.push_back(t);
    t *= sc.record_ratio;
  }
  out.push_back(2.0 * T);
  return out;
}

std::string describe(const Scenario& sc) {
  std::ostringstream o;
  o << "metric.kind = " << sc.metric_kind << "\n";
  if (sc.metric_kind == "sound_speed")
    o << "metric.c_prime0 = " << sc.c_prime0 << "\n";
  o << "scattering.profile = " << sc.profile << "\n"
    << "scattering.amplitude = " << sc.amplitude << "\n"
    << "scattering.R = " << sc.R << "\n"
    << "scattering.angular = " << sc.angular << "\n"
    << "asymptotics.epsilon = " << sc.epsilon << "\n"
    << "asymptotics.delta = " << sc.delta << "\n"
    << "asymptotics.quad_tol = " << sc.quad_tol << "\n"
    << "asymptotics.ode_tol = " << sc.ode_tol << "\n"
    << "asymptotics.omega = [" << sc.omega.x << ", " << sc.omega.y << ", "
    << sc.omega.z << "]\n"
    << "profile_eval.T_R = " << resolved_T_R(sc) << "\n"
    << "profile_eval.fd_step = " << sc.fd_step << "\n";
  o << "solver.T = [";
  for (std::size_t i = 0; i < sc.T_list.size(); ++i)
    o << (i ? ", " : "") << sc.T_list[i];
  o << "]\n"
    << "solver.t_min = " << resolved_t_min(sc) << "\n"
    << "solver.h = " << sc.h << "\n"
    << "solver.cfl = " << sc.cfl << "\n"
    << "solver.r_max = " << resolved_r_max(sc) << "\n"
    << "solver.record_ratio = " << sc.record_ratio << "\n"
    << "energy.c0 = " << sc.c0 << "\n"
    << "output.dir = " << sc.out_dir << "\n"
    << "output.seed = " << sc.seed << "\n"
    << "output.threads = " << sc.threads << "\n";
  return o.str();
}

}  // namespace qlw
