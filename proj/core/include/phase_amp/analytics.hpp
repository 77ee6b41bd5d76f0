#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "phase_amp/encoding.hpp"
#include "phase_amp/rational.hpp"
#include "phase_amp/two_peak_model.hpp"

namespace phase_amp::analytics {

// Continuum normalization of the uniform landscape after m successes,
// d_m^2 = 1 / C(2m, m).
struct CentralBinomialNorm {
  double value = 0.0;
  std::optional<Rational> exact;  // m <= 30
};
CentralBinomialNorm central_binomial_norm(int m);

// Continuum success probability of the m-th measurement on a uniform
// landscape, (2m - 1) / (2m). m >= 1.
double uniform_step_success(int m);

struct UniformRun {
  double exact = 0.0;     // (2M-1)!! / (2M)!!, product of step successes
  double log_exact = 0.0;
  double stirling = 0.0;  // 1 / sqrt(pi M)
  std::optional<Rational> exact_fraction;  // M <= 31
};
UniformRun uniform_run_probability(int big_m);

// Approximate tail mass above theta after M successes on a uniform landscape:
// sqrt(M/pi) * integral_theta^pi exp(-M (pi - phi)^2 / 4) dphi
//   = erf(sqrt(M) (pi - theta) / 2).
double gaussian_tail_estimate(double theta, int big_m);

struct TwoPeakStats {
  double ratio = 0.0;           // upper/lower mass after M successes (inf if a_l = 0)
  double p_upper = 0.0;         // chance a computational-basis measurement lands in the upper peak
  double run_probability = 0.0; // p_M = (q_l a_l^M + q_u a_u^M) / 2^M
  double run_probability_via_ratio = 0.0;  // (a_l^M q_l / 2^M)(1 + r)
  double upper_joint = 0.0;     // p_u(M) p_M = q_u a_u^M / 2^M
};
TwoPeakStats two_peak_stats(const TwoPeakModel& model, int big_m);

struct TwoPeakExact {
  Rational ratio;
  Rational p_upper;
  Rational run_probability;
};
// Same quantities in exact arithmetic for rational q_u, a_l, a_u. Requires
// a_l > 0 when M >= 1.
TwoPeakExact two_peak_stats_exact(Rational q_upper, Rational a_lower, Rational a_upper, int big_m);

// Real-valued number of successes that lifts the upper/lower ratio to r:
// log2(r q_l / q_u) / log2(a_u / a_l). Throws InvalidArgument unless
// a_u > a_l > 0.
double two_peak_required_m(const TwoPeakModel& model, double target_ratio);

struct Bounds {
  double lower = 0.0;
  double upper = 1.0;
};

// Bounds on P(phi_x >= phi_r) from the probability of m consecutive successes.
Bounds bound_from_success_run(double p_run, int m, double phi_r);

// Lower bound on the mass in the band (pi/2 - theta, pi/2 + theta) from p(01).
// theta must lie in (0, pi/2].
double band_bound(double p01, double theta);

struct PeakWindow {
  double z_max = 0.0;
  double width = 0.0;
  double theta_low = 0.0;   // angle interval where cos(theta) is within width of z_max
  double theta_high = 0.0;
};

// Peak of f(z) = (1 - z)^q (1 + z)^(m - q) and its width sqrt(8q(m-q)/m^3).
PeakWindow peak_window(int q, int m);
// Same center with the widest window sqrt(2/m) used for every q.
PeakWindow peak_window_max_width(int q, int m);

// Fraction of the histogram support inside the window (the P_{q,m} mass).
double window_mass(const PhaseHistogram& h, const PeakWindow& window);

// p(y) / [(q/m)^q ((m-q)/m)^(m-q)], clamped to [0, 1], with 0^0 = 1.
// Approximate by construction.
double estimate_mass_from_sequence(double p_y, int q, int m);

struct SamplingComparison {
  double p_amplified = 0.0;  // (1/N) sum_{theta_k >= theta} g_k ((1 - cos)/2)^m
  double p_sampled = 0.0;    // (1/N) sum_{theta_k >= theta} g_k
  // p_s / p_a: how many times fewer classical checks the amplified route
  // needs per successful draw (inf when p_a = 0 < p_s).
  double check_ratio = 0.0;
};
SamplingComparison sampling_comparison(const PhaseHistogram& h, double theta, int m);

nlohmann::json to_json(const UniformRun& run);
nlohmann::json to_json(const TwoPeakStats& stats);
nlohmann::json to_json(const Bounds& bounds);

}  // namespace phase_amp::analytics
