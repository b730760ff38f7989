#pragma once

#include <string>
#include <vector>

#include "qlw/reduced.hpp"

namespace qlw {

// Null-form coefficients of the general quasilinear reduced system
//   (mu U_q)_s = f0 U^2 - F1/2 mu U U_q + F2/4 mu^2 U_q^2
//   mu_s       = -G2/4 mu^2 U_q + G3/8 mu^3 U_qq + G3/8 mu^2 mu_q U_q
// evaluated at a fixed angle.
struct GeneralReducedModel {
  double G2 = 0.0;
  double G3 = 0.0;
  double F1 = 0.0;
  double F2 = 0.0;
  double f0 = 0.0;
};

struct GeneralSnapshot {
  double s = 0.0;
  std::vector<double> mu, uq, u;
};

struct BlowupReport {
  bool blew_up = false;
  double s_last_stable = 0.0;
  double max_abs_mu = 0.0;
  std::string reason;
};

struct GeneralRunResult {
  std::vector<double> q;
  std::vector<GeneralSnapshot> snapshots;
  BlowupReport report;
};

// Method-of-lines state: uniform q grid spanning [-R-1, R+1] (support padded
// by one unit so the ends sit in the A == 0 region), fields mu and U_q.
class GeneralReducedState {
 public:
  GeneralReducedState(GeneralReducedModel model, const AsymptoticState& asym, int n_q);

  const GeneralReducedModel& model() const { return model_; }
  const std::vector<double>& q() const { return q_; }
  const std::vector<double>& mu() const { return mu_; }
  const std::vector<double>& uq() const { return uq_; }
  double s() const { return s_; }
  double dq() const { return dq_; }

  // U reconstructed from U_q by cumulative quadrature from the left end,
  // where U = 0.
  std::vector<double> u() const;

  friend struct GeneralIntegrator;
  friend GeneralRunResult integrate_general_reduced(GeneralReducedState&, double,
                                                    double,
                                                    const std::vector<double>&,
                                                    double);

 private:
  GeneralReducedModel model_;
  std::vector<double> q_, mu_, uq_;
  double dq_ = 0.0;
  double s_ = 0.0;
};

// RK4 in s; the q-derivative uses a 4th-order central stencil (one-sided at
// the ends) applied to the conserved combination mu U_q, whose own evolution
// is spatially local.  Integration halts when max|mu| exceeds
// blowup_threshold or the fields stop being finite; the report carries the
// last stable s.  Snapshots are taken at the requested s values snapped to
// the step lattice.
GeneralRunResult integrate_general_reduced(GeneralReducedState& state, double s_max,
                                           double ds,
                                           const std::vector<double>& s_record,
                                           double blowup_threshold = 1e6);

}  // namespace qlw
