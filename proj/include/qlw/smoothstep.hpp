#pragma once

namespace qlw {

// Quintic smoothstep 6x^5 - 15x^4 + 10x^3, clamped to [0,1].  C^2 across the
// junctions, with analytic first and second derivatives.
inline double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

inline double smoothstep_d1(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  double u = x * (1.0 - x);
  return 30.0 * u * u;
}

inline double smoothstep_d2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return 60.0 * x * (x - 1.0) * (2.0 * x - 1.0);
}

// Ninth-degree smoothstep with s'(x) = 630 x^4 (1-x)^4: C^4 across the
// junctions.  Used for the profile cutoffs so that second-derivative
// stencils see a clean O(h^2) truncation there.
inline double smoothstep4(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double x2 = x * x, x4 = x2 * x2;
  return x4 * x * (126.0 + x * (-420.0 + x * (540.0 + x * (-315.0 + 70.0 * x))));
}

inline double smoothstep4_d1(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  double u = x * (1.0 - x);
  double u2 = u * u;
  return 630.0 * u2 * u2;
}

inline double smoothstep4_d2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  double u = x * (1.0 - x);
  return 2520.0 * u * u * u * (1.0 - 2.0 * x);
}

}  // namespace qlw
