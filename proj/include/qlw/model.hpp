#pragma once

#include "qlw/errors.hpp"
#include "qlw/geometry.hpp"

namespace qlw {

// Quasilinear metric family gtilde^{ab}(u).  Two representations:
//   SoundSpeed       -- gtilde^{00}=1, gtilde^{ij}=-c(u)^2 delta_ij with
//                       c(u) = 1 + c_prime0*u; carries the full nonlinearity.
//   GeneralLinearized -- only the constant symmetric linearization
//                       g^{ab} = d/du gtilde^{ab}|_{u=0}; valid for the
//                       asymptotic modules, not for PDE solves.
class Metric {
 public:
  enum class Kind { SoundSpeed, GeneralLinearized };

  static Metric sound_speed(double c_prime0);
  static Metric general_linearized(const Mat4& g_lin);

  Kind kind() const { return kind_; }
  double c_prime0() const;
  const Mat4& g_lin() const { return g_lin_; }

  // c(u) = 1 + c_prime0*u.  SoundSpeed only; requires c(u) > 0.
  double sound_speed_at(double u) const;

  // G(omega) = g^{ab} what_a what_b with what = (-1, omega).
  // Requires |omega| = 1 within 1e-12.
  double null_form(const Vec3& omega) const;

  // Full gtilde^{ab}(u) = diag(1, -c(u)^2, ...).  SoundSpeed only; |u| < 1.
  Mat4 gtilde(double u) const;

  // First-order expansion -m^{ab} + g^{ab} u; defined for both kinds.
  Mat4 gtilde_linearized(double u) const;

 private:
  Metric() = default;
  Kind kind_ = Kind::SoundSpeed;
  double c_prime0_ = 0.0;
  Mat4 g_lin_;
};

// Scattering data A(q,omega) = amplitude * a(q) * b(omega), with a compactly
// supported on [-R,R] and analytic q-derivatives.  The product form keeps
// support control and derivatives in closed form.
class ScatteringData {
 public:
  enum class Profile { Bump, SineBump, Spline };
  enum class Angular { Constant, LinearZ };

  ScatteringData(Profile profile, double amplitude, double R,
                 Angular angular = Angular::Constant, double angular_beta = 0.0);

  double a(double q) const;
  double a_q(double q) const;
  double a_qq(double q) const;
  // a and a' together; shares the transcendental evaluation.
  void a_pair(double q, double& a, double& a_q) const;
  double b(const Vec3& omega) const;

  double eval(double q, const Vec3& omega) const;    // A(q, omega)
  double eval_q(double q, const Vec3& omega) const;  // dA/dq

  double R() const { return R_; }
  double amplitude() const { return amplitude_; }
  Profile profile() const { return profile_; }
  Angular angular() const { return angular_; }
  double angular_beta() const { return beta_; }
  bool vanishes() const { return amplitude_ == 0.0; }
  bool angular_constant() const { return angular_ == Angular::Constant; }

  // Largest |a| and |a'| over the support; used for step and stability
  // heuristics.
  double sup_a() const;
  double sup_a_q() const;

 private:
  Profile profile_;
  double amplitude_;
  double R_;
  Angular angular_;
  double beta_;
};

}  // namespace qlw
