#include "qlw/model.hpp"

#include <cmath>

namespace qlw {

Metric Metric::sound_speed(double c_prime0) {
  Metric m;
  m.kind_ = Kind::SoundSpeed;
  m.c_prime0_ = c_prime0;
  // d/du of diag(1, -c(u)^2 ...) at u=0 is diag(0, -2c'(0) ...).
  m.g_lin_ = Mat4::diag(0.0, -2.0 * c_prime0, -2.0 * c_prime0, -2.0 * c_prime0);
  return m;
}

Metric Metric::general_linearized(const Mat4& g_lin) {
  if (!g_lin.symmetric(0.0)) throw DomainError("metric: g_lin must be symmetric");
  Metric m;
  m.kind_ = Kind::GeneralLinearized;
  m.g_lin_ = g_lin;
  return m;
}

double Metric::c_prime0() const {
  if (kind_ != Kind::SoundSpeed)
    throw UnsupportedError("metric: c'(0) is defined only for the SoundSpeed model");
  return c_prime0_;
}

double Metric::sound_speed_at(double u) const {
  if (kind_ != Kind::SoundSpeed)
    throw UnsupportedError("metric: c(u) is defined only for the SoundSpeed model");
  return 1.0 + c_prime0_ * u;
}

double Metric::null_form(const Vec3& omega) const {
  if (std::abs(omega.norm() - 1.0) > 1e-12)
    throw DomainError("null_form: omega must be a unit vector");
  std::array<double, 4> what = {-1.0, omega.x, omega.y, omega.z};
  return g_lin_.contract(what);
}

Mat4 Metric::gtilde(double u) const {
  if (kind_ != Kind::SoundSpeed)
    throw UnsupportedError(
        "gtilde: full nonlinearity is defined only for the SoundSpeed model");
  if (std::abs(u) >= 1.0) throw DomainError("gtilde: |u| must be < 1");
  double c = sound_speed_at(u);
  if (c <= 0.0) throw DomainError("gtilde: degenerate sound speed");
  return Mat4::diag(1.0, -c * c, -c * c, -c * c);
}

Mat4 Metric::gtilde_linearized(double u) const {
  Mat4 m = Mat4::minkowski();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) += g_lin_(i, j) * u;
  return m;
}

ScatteringData::ScatteringData(Profile profile, double amplitude, double R,
                               Angular angular, double angular_beta)
    : profile_(profile), amplitude_(amplitude), R_(R), angular_(angular),
      beta_(angular_beta) {
  if (R < 1.0) throw DomainError("scattering data: support radius must satisfy R >= 1");
}

double ScatteringData::a(double q) const {
  double x = q / R_;
  if (std::abs(x) >= 1.0) return 0.0;
  switch (profile_) {
    case Profile::Bump:
      return std::exp(-1.0 / (1.0 - x * x));
    case Profile::SineBump: {
      double c = std::cos(0.5 * M_PI * x);
      return c * c;
    }
    case Profile::Spline: {
      double w = 1.0 - x * x;
      return w * w * w;
    }
  }
  return 0.0;
}

double ScatteringData::a_q(double q) const {
  double x = q / R_;
  if (std::abs(x) >= 1.0) return 0.0;
  switch (profile_) {
    case Profile::Bump: {
      double w = 1.0 - x * x;
      return std::exp(-1.0 / w) * (-2.0 * x / (w * w)) / R_;
    }
    case Profile::SineBump:
      return -0.5 * M_PI / R_ * std::sin(M_PI * x);
    case Profile::Spline: {
      double w = 1.0 - x * x;
      return -6.0 * x * w * w / R_;
    }
  }
  return 0.0;
}

double ScatteringData::a_qq(double q) const {
  double x = q / R_;
  if (std::abs(x) >= 1.0) return 0.0;
  switch (profile_) {
    case Profile::Bump: {
      double w = 1.0 - x * x;
      double g = -2.0 * x / (w * w);
      double gp = -2.0 / (w * w) - 8.0 * x * x / (w * w * w);
      return std::exp(-1.0 / w) * (g * g + gp) / (R_ * R_);
    }
    case Profile::SineBump:
      return -0.5 * M_PI * M_PI / (R_ * R_) * std::cos(M_PI * x);
    case Profile::Spline: {
      double w = 1.0 - x * x;
      return (-6.0 * w * w + 24.0 * x * x * w) / (R_ * R_);
    }
  }
  return 0.0;
}

void ScatteringData::a_pair(double q, double& a_out, double& aq_out) const {
  double x = q / R_;
  if (std::abs(x) >= 1.0) {
    a_out = 0.0;
    aq_out = 0.0;
    return;
  }
  switch (profile_) {
    case Profile::Bump: {
      double w = 1.0 - x * x;
      double e = std::exp(-1.0 / w);
      a_out = e;
      aq_out = e * (-2.0 * x / (w * w)) / R_;
      return;
    }
    case Profile::SineBump: {
      double c = std::cos(0.5 * M_PI * x), s = std::sin(0.5 * M_PI * x);
      a_out = c * c;
      aq_out = -M_PI / R_ * s * c;
      return;
    }
    case Profile::Spline: {
      double w = 1.0 - x * x;
      a_out = w * w * w;
      aq_out = -6.0 * x * w * w / R_;
      return;
    }
  }
}

double ScatteringData::b(const Vec3& omega) const {
  switch (angular_) {
    case Angular::Constant:
      return 1.0;
    case Angular::LinearZ:
      return 1.0 + beta_ * omega.z;
  }
  return 1.0;
}

double ScatteringData::eval(double q, const Vec3& omega) const {
  return amplitude_ * a(q) * b(omega);
}

double ScatteringData::eval_q(double q, const Vec3& omega) const {
  return amplitude_ * a_q(q) * b(omega);
}

double ScatteringData::sup_a() const {
  switch (profile_) {
    case Profile::Bump:
      return std::exp(-1.0);
    case Profile::SineBump:
    case Profile::Spline:
      return 1.0;
  }
  return 1.0;
}

double ScatteringData::sup_a_q() const {
  double m = 0.0;
  for (int i = 0; i <= 400; ++i) {
    double q = -R_ + 2.0 * R_ * i / 400.0;
    m = std::max(m, std::abs(a_q(q)));
  }
  return m;
}

}  // namespace qlw
