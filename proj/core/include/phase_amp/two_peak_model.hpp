#pragma once

namespace phase_amp {

// Phase landscape with a fraction q_l of assignments at alpha_l < pi/2 and
// q_u = 1 - q_l at alpha_u > pi/2. a = 1 - cos(alpha) is the per-success
// growth factor of each peak (up to the common 1/2).
struct TwoPeakModel {
  double q_upper = 0.0;
  double alpha_lower = 0.0;
  double alpha_upper = 0.0;
  double a_lower = 0.0;
  double a_upper = 0.0;

  double q_lower() const { return 1.0 - q_upper; }

  // Throws InvalidArgument unless 0 < q_u < 1 and 0 <= alpha_l < pi/2 < alpha_u <= pi.
  static TwoPeakModel from_angles(double q_upper, double alpha_lower, double alpha_upper);
  // Keeps a_l and a_u exactly as given; angles are acos(1 - a).
  static TwoPeakModel from_coefficients(double q_upper, double a_lower, double a_upper);
};

}  // namespace phase_amp
