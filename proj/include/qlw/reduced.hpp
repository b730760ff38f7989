#pragma once

#include <vector>

#include "qlw/model.hpp"

namespace qlw {

// Closed-form solution of the reduced asymptotic system at a fixed angle.
// With the gauge mu(0,q) = -2 and U_q(0,q) = A(q), the system collapses to
// linear ODEs in s whose solutions are
//   mu  = -2 exp( G A(q) s / 2)
//   U_q =  A exp(-G A(q) s / 2)
// and mu * U_q = -2 A(q) is conserved exactly.  U and U_s are recovered by
// quadrature in q from the left (U -> 0 as q -> -infinity).
class AsymptoticState {
 public:
  AsymptoticState(ScatteringData data, const Metric& metric, Vec3 omega,
                  double quad_tol = 1e-10);

  double A(double q) const { return data_.eval(q, omega_); }
  double A_q(double q) const { return data_.eval_q(q, omega_); }
  double A_qq(double q) const { return data_.amplitude() * data_.a_qq(q) * b_; }
  void A_pair(double q, double& A, double& A_q) const {
    data_.a_pair(q, A, A_q);
    A *= data_.amplitude() * b_;
    A_q *= data_.amplitude() * b_;
  }

  double mu(double s, double q) const;
  double mu_q(double s, double q) const;
  double Uq(double s, double q) const;
  double Uqq(double s, double q) const;
  double Us(double s, double q) const;
  double U(double s, double q) const;

  // Integral of the U_q kernel over [q0, q1] (both clamped to the support).
  // tol <= 0 selects the state's quad_tol.
  double U_between(double s, double q0, double q1, double tol = 0.0) const;
  double Us_between(double s, double q0, double q1, double tol = 0.0) const;

  double R() const { return data_.R(); }
  double G() const { return G_; }
  double quad_tol() const { return quad_tol_; }
  const ScatteringData& data() const { return data_; }
  const Vec3& omega() const { return omega_; }

 private:
  ScatteringData data_;
  Vec3 omega_;
  double b_;  // angular factor at omega, premultiplied into A
  double G_;
  double quad_tol_;
};

struct ReducedTrajectories {
  std::vector<double> s;                // n_s+1 values, 0..s_max
  std::vector<double> q;                // q grid
  std::vector<double> mu;               // row-major (s index major)
  std::vector<double> uq;
  double at_mu(std::size_t is, std::size_t iq) const { return mu[is * q.size() + iq]; }
  double at_uq(std::size_t is, std::size_t iq) const { return uq[is * q.size() + iq]; }
};

// Classical RK4 on the pointwise system
//   d mu/ds = -G/4 mu^2 U_q,   d U_q/ds = G/4 mu U_q^2
// run independently per q point.  Serves as the numerical cross-check of the
// closed forms; mu*U_q stays conserved to integrator accuracy.
ReducedTrajectories integrate_reduced_ode(const AsymptoticState& state, double s_max,
                                          int n_steps, const std::vector<double>& q_grid);

// CSV dump with header s,q,mu,Uq,U.
void write_reduced_csv(const AsymptoticState& state, const ReducedTrajectories& tr,
                       const std::string& path, int s_stride = 1);

}  // namespace qlw
