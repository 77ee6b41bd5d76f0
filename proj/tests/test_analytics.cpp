#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "phase_amp/amplifier.hpp"
#include "phase_amp/analytics.hpp"
#include "phase_amp/errors.hpp"

using namespace phase_amp;
using namespace phase_amp::analytics;

TEST_CASE("central binomial normalization") {
  const auto d1 = central_binomial_norm(1);
  CHECK(d1.value == doctest::Approx(0.5));
  CHECK(d1.exact == Rational(1, 2));
  CHECK(central_binomial_norm(3).exact == Rational(1, 20));
  CHECK_FALSE(central_binomial_norm(31).exact.has_value());
  // d_m^2 = 1 / C(2m, m)
  CHECK(central_binomial_norm(40).value ==
        doctest::Approx(std::exp(2 * std::lgamma(41.0) - std::lgamma(81.0))).epsilon(1e-10));
}

TEST_CASE("uniform step and run probabilities") {
  CHECK(uniform_step_success(1) == doctest::Approx(0.5));
  CHECK(uniform_step_success(2) == doctest::Approx(0.75));
  for (int m : {1, 2, 5, 10, 31, 100, 1000, 5000}) {
    const auto run = uniform_run_probability(m);
    CHECK(run.exact == doctest::Approx(oracle::central_ratio(m)).epsilon(1e-10));
    CHECK(run.stirling == doctest::Approx(1 / std::sqrt(oracle::kPi * m)));
  }
  CHECK(uniform_run_probability(2).exact_fraction == Rational(3, 8));
  CHECK_FALSE(uniform_run_probability(32).exact_fraction.has_value());
  CHECK_THROWS_AS(uniform_run_probability(0), InvalidArgument);
}

TEST_CASE("stirling relative error stays under 1/(4M)") {
  for (int m : {10, 50, 100}) {
    const auto run = uniform_run_probability(m);
    CHECK(std::abs(run.stirling - run.exact) / run.exact <= 1.0 / (4.0 * m));
  }
}

TEST_CASE("gaussian tail uses an accurate error function") {
  for (double theta : {2.0, 2.5, 3.0}) {
    for (int m : {4, 25, 100}) {
      const double x = std::sqrt(double(m)) * (oracle::kPi - theta) / 2;
      CHECK(gaussian_tail_estimate(theta, m) == doctest::Approx(oracle::erf_quadrature(x)).epsilon(1e-11));
    }
  }
}

TEST_CASE("two-peak worked example") {
  const auto model = TwoPeakModel::from_coefficients(0.125, 0.125, 2.0);
  const auto s1 = two_peak_stats(model, 1);
  CHECK(s1.ratio == doctest::Approx(16.0 / 7));
  CHECK(s1.run_probability == doctest::Approx(23.0 / 128));
  CHECK(s1.run_probability_via_ratio == doctest::Approx(s1.run_probability));
  const auto s2 = two_peak_stats(model, 2);
  CHECK(s2.ratio == doctest::Approx(256.0 / 7));
  CHECK(s2.run_probability == doctest::Approx(263.0 / 2048));
  CHECK(s2.upper_joint == doctest::Approx(s2.p_upper * s2.run_probability));

  const auto e2 = two_peak_stats_exact(Rational(1, 8), Rational(1, 8), Rational(2), 2);
  CHECK(e2.ratio == Rational(256, 7));
  CHECK(e2.run_probability == Rational(263, 2048));
  CHECK(e2.p_upper == Rational(256, 263));

  CHECK(two_peak_required_m(model, 256.0 / 7) == doctest::Approx(2.0));
  CHECK_THROWS_AS(two_peak_required_m(TwoPeakModel::from_coefficients(0.5, 1.0, 0.5), 2.0), InvalidArgument);
}

TEST_CASE("two-peak stats agree with a histogram realization") {
  const auto model = TwoPeakModel::from_coefficients(0.25, 0.5, 1.5);
  const auto h = two_peak_histogram(model, 400);
  for (int m = 1; m <= 6; ++m) {
    const auto run = success_run(h, m);
    const auto stats = two_peak_stats(model, m);
    CHECK(run.probability == doctest::Approx(stats.run_probability).epsilon(1e-10));
    CHECK(run.state.weight(1) == doctest::Approx(stats.p_upper).epsilon(1e-10));
  }
}

TEST_CASE("bounds on a known histogram") {
  const auto h = PhaseHistogram::from_angles({0.5, 1.5, 2.5, 3.0}, {4, 3, 2, 1});
  const double phi_r = 2.0;
  const double exact = 0.3;
  for (int m = 1; m <= 4; ++m) {
    const auto b = bound_from_success_run(sequence_probability(h, m, m), m, phi_r);
    CHECK(b.lower <= exact + 1e-12);
    CHECK(b.upper >= exact - 1e-12);
  }
  CHECK_THROWS_AS(bound_from_success_run(0.1, 0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(bound_from_success_run(0.1, 1, oracle::kPi), InvalidArgument);
  CHECK_THROWS_AS(band_bound(0.1, 0.0), InvalidArgument);
  CHECK(band_bound(0.25, oracle::kPi / 2) == doctest::Approx(1.0));
}

TEST_CASE("peak windows") {
  const auto w = peak_window(0, 10);
  CHECK(w.z_max == 1.0);
  CHECK(w.width == 0.0);
  const auto mid = peak_window(5, 10);
  CHECK(mid.z_max == 0.0);
  CHECK(mid.width == doctest::Approx(std::sqrt(8.0 * 25 / 1000)));
  CHECK(mid.theta_low < oracle::kPi / 2);
  CHECK(mid.theta_high > oracle::kPi / 2);
  CHECK(peak_window_max_width(1, 10).width >= peak_window(1, 10).width);
  const auto h = uniform_histogram(100);
  CHECK(window_mass(h, mid) > 0.0);
  CHECK(window_mass(h, mid) < 1.0);
  CHECK(estimate_mass_from_sequence(0.0, 2, 4) == 0.0);
  CHECK(estimate_mass_from_sequence(1.0, 2, 4) == 1.0);
}

TEST_CASE("sampling comparison") {
  const auto h = PhaseHistogram::from_angles({1.0, 2.0, oracle::kPi}, {5, 3, 2});
  const auto c = sampling_comparison(h, 2.0, 3);
  CHECK(c.p_sampled == doctest::Approx(0.5));
  CHECK(c.p_amplified == doctest::Approx((3 * std::pow(success_factor(2.0), 3) + 2) / 10));
  CHECK(c.check_ratio == doctest::Approx(c.p_sampled / c.p_amplified));
  CHECK(sampling_comparison(h, 0.0, 0).p_amplified == doctest::Approx(1.0));
}

TEST_CASE("json") {
  CHECK(to_json(uniform_run_probability(4)).contains("relative_error"));
  CHECK(to_json(Bounds{0.1, 0.2})["lower"] == 0.1);
  CHECK(to_json(two_peak_stats(TwoPeakModel::from_coefficients(0.125, 0.125, 2.0), 1)).contains("ratio"));
}
