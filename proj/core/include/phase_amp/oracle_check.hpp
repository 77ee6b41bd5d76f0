#pragma once

#include <cstdint>

namespace phase_amp {

struct OracleCheckReport {
  int trials = 0;
  long long sequences = 0;
  double max_probability_deviation = 0.0;    // |p_class(y) - p_full(y)|
  double max_distribution_deviation = 0.0;   // per-x conditional probabilities
  double max_closed_form_deviation = 0.0;    // |p_full(y) - F(q, m-q)/(2^m N)|
};

// Random phase sets over N = 2^n_G - 1 assignments (n_G drawn from
// 1..max_qubits), half with continuous phases and half snapped to a k*pi/E grid
// so classes hold several assignments. Every outcome string of length
// 0..max_sequence is run through both the class-weight engine and the
// state-vector simulator. Zero-probability branches must agree on both sides.
OracleCheckReport verify_oracle(int max_qubits, int max_sequence, int trials, std::uint64_t seed);

}  // namespace phase_amp
