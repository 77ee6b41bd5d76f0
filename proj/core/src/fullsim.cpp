#include "phase_amp/fullsim.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phase_amp/errors.hpp"

namespace phase_amp::fullsim {

double DoubledState::norm_squared() const {
  double sum = 0.0;
  for (const auto& amp : a_branch) sum += std::norm(amp);
  for (const auto& amp : b_branch) sum += std::norm(amp);
  return sum;
}

DoubledState prepare(std::span<const double> phases) {
  if (phases.empty()) throw InvalidArgument("prepare needs at least one phase");
  const double amp = 1.0 / std::sqrt(static_cast<double>(phases.size()));
  return {std::vector<Amplitude>(phases.size(), Amplitude{amp, 0.0}),
          std::vector<Amplitude>(phases.size(), Amplitude{})};
}

DoubledState apply_pairing(const DoubledState& s) {
  const double r = 1.0 / std::numbers::sqrt2;
  DoubledState out{std::vector<Amplitude>(s.support()), std::vector<Amplitude>(s.support())};
  for (std::size_t i = 0; i < s.support(); ++i) {
    out.a_branch[i] = r * (s.a_branch[i] - s.b_branch[i]);
    out.b_branch[i] = r * (s.a_branch[i] + s.b_branch[i]);
  }
  return out;
}

DoubledState apply_phase_oracle(const DoubledState& s, std::span<const double> phases) {
  if (phases.size() != s.support()) throw InvalidArgument("phase count does not match the state");
  DoubledState out = s;
  for (std::size_t i = 0; i < s.support(); ++i) out.a_branch[i] *= std::polar(1.0, phases[i]);
  return out;
}

DoubledState apply_interference_round(const DoubledState& s, std::span<const double> phases) {
  return apply_pairing(apply_phase_oracle(apply_pairing(s), phases));
}

Measured measure_reference(const DoubledState& s, int outcome) {
  if (outcome != 0 && outcome != 1) throw InvalidArgument("measurement outcome must be 0 or 1");
  const auto& kept = outcome == 1 ? s.a_branch : s.b_branch;
  double p = 0.0;
  for (const auto& amp : kept) p += std::norm(amp);
  if (!(p > 0.0)) {
    throw ImpossibleOutcome("reference measurement outcome " + std::to_string(outcome) +
                            " has probability zero");
  }
  const double scale = 1.0 / std::sqrt(p);
  Measured result{{std::vector<Amplitude>(s.support()), std::vector<Amplitude>(s.support())}, p};
  for (std::size_t i = 0; i < s.support(); ++i) result.state.a_branch[i] = kept[i] * scale;
  return result;
}

FullRun run_sequence_fullsim(std::span<const double> phases, const MeasurementSequence& y) {
  if (phases.size() > kMaxSupport || y.length() > kMaxSequenceLength) {
    throw ResourceLimit("full simulation is limited to N <= " + std::to_string(kMaxSupport) +
                        " and m <= " + std::to_string(kMaxSequenceLength));
  }
  DoubledState state = prepare(phases);
  double probability = 1.0;
  for (auto outcome : y.outcomes()) {
    auto measured = measure_reference(apply_interference_round(state, phases), outcome);
    probability *= measured.probability;
    state = std::move(measured.state);
  }
  std::vector<double> distribution(state.support());
  for (std::size_t i = 0; i < state.support(); ++i) distribution[i] = std::norm(state.a_branch[i]);
  return {probability, std::move(distribution), std::move(state)};
}

}  // namespace phase_amp::fullsim
