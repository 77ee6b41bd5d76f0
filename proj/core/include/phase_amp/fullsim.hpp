#pragma once

#include <complex>
#include <span>
#include <vector>

#include "phase_amp/amplifier.hpp"

namespace phase_amp::fullsim {

using Amplitude = std::complex<double>;

// Two-register state restricted to the 2N-dimensional subspace spanned by
// |x>_a|0>_b and |0>_a|x>_b for x = 1..N. The interference operator maps this
// subspace to itself and never touches |0>_a|0>_b.
struct DoubledState {
  std::vector<Amplitude> a_branch;  // coefficient of |x>_a|0>_b, index x-1
  std::vector<Amplitude> b_branch;  // coefficient of |0>_a|x>_b, index x-1

  std::size_t support() const { return a_branch.size(); }
  double norm_squared() const;
};

// Desk-scale caps for run_sequence_fullsim.
inline constexpr std::size_t kMaxSupport = 1024;
inline constexpr int kMaxSequenceLength = 8;

// (1/sqrt(N)) sum_x |x>_a |0>_b.
DoubledState prepare(std::span<const double> phases);

// The U_ab pairing unitary:
//   |x>|0> -> (|x>|0> + |0>|x>)/sqrt2,   |0>|x> -> (|0>|x> - |x>|0>)/sqrt2.
DoubledState apply_pairing(const DoubledState& s);
// U_a (x) I_b: phase e^{i phi_x} on |x>_a, identity on |0>_a.
DoubledState apply_phase_oracle(const DoubledState& s, std::span<const double> phases);
// U_ab (U_a (x) I_b) U_ab.
DoubledState apply_interference_round(const DoubledState& s, std::span<const double> phases);

struct Measured {
  DoubledState state;
  double probability = 0.0;
};

// Measures I_a (x) P_0b. Outcome 1 keeps the |x>_a|0>_b branch; outcome 0 keeps
// |0>_a|x>_b and swaps the registers so the kept b system becomes the new a
// register. Throws ImpossibleOutcome on a zero-probability branch.
Measured measure_reference(const DoubledState& s, int outcome);

struct FullRun {
  double probability = 0.0;
  std::vector<double> distribution;  // conditional P(x), index x-1
  DoubledState state;
};

// Alternates interference rounds and measurements per y. Throws ResourceLimit
// above kMaxSupport phases or kMaxSequenceLength outcomes.
FullRun run_sequence_fullsim(std::span<const double> phases, const MeasurementSequence& y);

}  // namespace phase_amp::fullsim
