#include "phase_amp/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "phase_amp/amplifier.hpp"
#include "phase_amp/errors.hpp"

namespace phase_amp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_angles(double q_upper, double alpha_lower, double alpha_upper) {
  if (!(q_upper > 0.0 && q_upper < 1.0)) {
    throw InvalidArgument("two-peak model needs 0 < q_u < 1");
  }
  if (!(alpha_lower >= 0.0 && alpha_lower < kPi / 2 && alpha_upper > kPi / 2 && alpha_upper <= kPi)) {
    throw InvalidArgument("two-peak model needs 0 <= alpha_l < pi/2 < alpha_u <= pi");
  }
}

// C(2m, m) exactly for m <= 31.
std::int64_t central_binomial(int m) {
  __int128 c = 1;
  for (int i = 0; i < m; ++i) c = c * (2 * m - i) / (i + 1);
  return static_cast<std::int64_t>(c);
}

}  // namespace

TwoPeakModel TwoPeakModel::from_angles(double q_upper, double alpha_lower, double alpha_upper) {
  require_angles(q_upper, alpha_lower, alpha_upper);
  return {q_upper, alpha_lower, alpha_upper, 1.0 - std::cos(alpha_lower), 1.0 - std::cos(alpha_upper)};
}

TwoPeakModel TwoPeakModel::from_coefficients(double q_upper, double a_lower, double a_upper) {
  if (!(a_lower >= 0.0 && a_lower < 1.0 && a_upper > 1.0 && a_upper <= 2.0)) {
    throw InvalidArgument("two-peak model needs 0 <= a_l < 1 < a_u <= 2");
  }
  const double alpha_lower = std::acos(1.0 - a_lower);
  const double alpha_upper = std::acos(1.0 - a_upper);
  require_angles(q_upper, alpha_lower, alpha_upper);
  return {q_upper, alpha_lower, alpha_upper, a_lower, a_upper};
}

namespace analytics {

CentralBinomialNorm central_binomial_norm(int m) {
  if (m < 0) throw InvalidArgument("central_binomial_norm needs m >= 0");
  CentralBinomialNorm out;
  if (m <= 30) {
    out.exact = Rational(1, central_binomial(m));
    out.value = out.exact->to_double();
  } else {
    out.value = std::exp(2.0 * std::lgamma(m + 1.0) - std::lgamma(2.0 * m + 1.0));
  }
  return out;
}

double uniform_step_success(int m) {
  if (m < 1) throw InvalidArgument("uniform_step_success needs m >= 1");
  return (2.0 * m - 1.0) / (2.0 * m);
}

UniformRun uniform_run_probability(int big_m) {
  if (big_m < 1) throw InvalidArgument("uniform_run_probability needs M >= 1");
  UniformRun out;
  constexpr int kProductLimit = 1 << 20;
  if (big_m <= kProductLimit) {
    out.exact = 1.0;
    for (int i = 1; i <= big_m; ++i) out.exact *= uniform_step_success(i);
    out.log_exact = std::log(out.exact);
  } else {
    out.log_exact = std::lgamma(2.0 * big_m + 1.0) - 2.0 * std::lgamma(big_m + 1.0) -
                    2.0 * big_m * std::numbers::ln2;
    out.exact = std::exp(out.log_exact);
  }
  out.stirling = 1.0 / std::sqrt(kPi * big_m);
  if (big_m <= 31) out.exact_fraction = Rational(central_binomial(big_m), std::int64_t{1} << (2 * big_m));
  return out;
}

double gaussian_tail_estimate(double theta, int big_m) {
  if (big_m < 1) throw InvalidArgument("gaussian_tail_estimate needs M >= 1");
  if (!(theta >= 0.0 && theta <= kPi)) throw InvalidArgument("theta must lie in [0, pi]");
  return std::erf(std::sqrt(static_cast<double>(big_m)) * (kPi - theta) / 2.0);
}

TwoPeakStats two_peak_stats(const TwoPeakModel& model, int big_m) {
  if (big_m < 0) throw InvalidArgument("two_peak_stats needs M >= 0");
  const double lower = model.q_lower() * std::pow(model.a_lower, big_m);
  const double upper = model.q_upper * std::pow(model.a_upper, big_m);
  const double scale = std::ldexp(1.0, -big_m);
  TwoPeakStats out;
  out.ratio = lower > 0.0 ? upper / lower : kInf;
  out.p_upper = upper / (upper + lower);
  out.run_probability = scale * (lower + upper);
  out.run_probability_via_ratio = lower > 0.0 ? scale * lower * (1.0 + out.ratio) : out.run_probability;
  out.upper_joint = scale * upper;
  return out;
}

TwoPeakExact two_peak_stats_exact(Rational q_upper, Rational a_lower, Rational a_upper, int big_m) {
  if (big_m < 0) throw InvalidArgument("two_peak_stats_exact needs M >= 0");
  const Rational q_lower = Rational(1) - q_upper;
  const Rational lower = q_lower * a_lower.pow(big_m);
  const Rational upper = q_upper * a_upper.pow(big_m);
  if (lower.num() == 0) throw InvalidArgument("exact ratio is infinite when a_l = 0");
  return {upper / lower, upper / (upper + lower), (lower + upper) / Rational(2).pow(big_m)};
}

double two_peak_required_m(const TwoPeakModel& model, double target_ratio) {
  if (!(model.a_upper > model.a_lower && model.a_lower > 0.0)) {
    throw InvalidArgument("no amplification: need a_u > a_l > 0");
  }
  if (!(target_ratio > 0.0)) throw InvalidArgument("target ratio must be positive");
  return std::log2(target_ratio * model.q_lower() / model.q_upper) /
         std::log2(model.a_upper / model.a_lower);
}

Bounds bound_from_success_run(double p_run, int m, double phi_r) {
  if (!(phi_r > 0.0 && phi_r < kPi)) throw InvalidArgument("reference phase must lie in (0, pi)");
  if (!(p_run >= 0.0 && p_run <= 1.0)) throw InvalidArgument("p_run must lie in [0, 1]");
  if (m < 1) throw InvalidArgument("bounds need m >= 1");
  const double scale = std::ldexp(1.0, m);
  const double reach = std::pow(1.0 - std::cos(phi_r), m);
  Bounds out;
  out.lower = std::max(0.0, (scale * p_run - reach) / (scale - reach));
  out.upper = std::min(1.0, scale * p_run / reach);
  return out;
}

double band_bound(double p01, double theta) {
  if (!(theta > 0.0 && theta <= kPi / 2)) throw InvalidArgument("band half-width must lie in (0, pi/2]");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return std::max(0.0, (4.0 * p01 - c * c) / (s * s));
}

namespace {

PeakWindow window_with_width(int q, int m, double width) {
  PeakWindow w;
  w.z_max = static_cast<double>(m - 2 * q) / m;
  w.width = width;
  w.theta_low = std::acos(std::min(1.0, w.z_max + width));
  w.theta_high = std::acos(std::max(-1.0, w.z_max - width));
  return w;
}

void require_qm(int q, int m) {
  if (m < 1 || q < 0 || q > m) throw InvalidArgument("need m >= 1 and 0 <= q <= m");
}

}  // namespace

PeakWindow peak_window(int q, int m) {
  require_qm(q, m);
  const double width = std::sqrt(8.0 * q * (m - q) / (static_cast<double>(m) * m * m));
  return window_with_width(q, m, width);
}

PeakWindow peak_window_max_width(int q, int m) {
  require_qm(q, m);
  return window_with_width(q, m, std::sqrt(2.0 / m));
}

double window_mass(const PhaseHistogram& h, const PeakWindow& window) {
  constexpr double kSlack = 1e-12;
  std::uint64_t inside = 0;
  for (const auto& level : h.levels()) {
    const double c = std::cos(level.theta);
    if (c >= window.z_max - window.width - kSlack && c <= window.z_max + window.width + kSlack) {
      inside += level.count;
    }
  }
  return static_cast<double>(inside) / static_cast<double>(h.support());
}

double estimate_mass_from_sequence(double p_y, int q, int m) {
  require_qm(q, m);
  if (!(p_y >= 0.0 && p_y <= 1.0)) throw InvalidArgument("p(y) must lie in [0, 1]");
  if (p_y == 0.0) return 0.0;
  const double frac = static_cast<double>(q) / m;
  const double peak = std::pow(frac, q) * std::pow(1.0 - frac, m - q);
  return std::clamp(p_y / peak, 0.0, 1.0);
}

SamplingComparison sampling_comparison(const PhaseHistogram& h, double theta, int m) {
  if (m < 0) throw InvalidArgument("sampling_comparison needs m >= 0");
  constexpr double kSlack = 1e-12;
  double amplified = 0.0;
  double sampled = 0.0;
  for (const auto& level : h.levels()) {
    if (level.theta < theta - kSlack) continue;
    const auto g = static_cast<double>(level.count);
    sampled += g;
    amplified += g * std::pow(success_factor(level.theta), m);
  }
  const auto n = static_cast<double>(h.support());
  SamplingComparison out{amplified / n, sampled / n, 0.0};
  out.check_ratio = out.p_amplified > 0.0 ? out.p_sampled / out.p_amplified
                                          : (out.p_sampled > 0.0 ? kInf : 1.0);
  return out;
}

nlohmann::json to_json(const UniformRun& run) {
  nlohmann::json j = {{"exact", run.exact},
                      {"log_exact", run.log_exact},
                      {"stirling_approx", run.stirling},
                      {"relative_error", std::abs(run.stirling - run.exact) / run.exact}};
  if (run.exact_fraction) j["exact_fraction"] = run.exact_fraction->to_string();
  return j;
}

nlohmann::json to_json(const TwoPeakStats& stats) {
  auto finite_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  return {{"ratio", finite_or_null(stats.ratio)},
          {"p_upper", stats.p_upper},
          {"run_probability", stats.run_probability},
          {"run_probability_via_ratio", stats.run_probability_via_ratio},
          {"upper_joint", stats.upper_joint}};
}

nlohmann::json to_json(const Bounds& bounds) {
  return {{"lower", bounds.lower}, {"upper", bounds.upper}};
}

}  // namespace analytics
}  // namespace phase_amp
