#include "phase_amp/oracle_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "phase_amp/amplifier.hpp"
#include "phase_amp/errors.hpp"
#include "phase_amp/fullsim.hpp"

namespace phase_amp {

namespace {

std::vector<double> random_phases(std::mt19937_64& rng, int max_qubits, bool snapped) {
  std::uniform_int_distribution<int> qubits(1, max_qubits);
  const std::size_t n = (std::size_t{1} << qubits(rng)) - 1;
  std::vector<double> phases(n);
  if (snapped) {
    std::uniform_int_distribution<int> denominator(1, 12);
    const int den = denominator(rng);
    std::uniform_int_distribution<int> level(0, den);
    for (auto& p : phases) p = std::numbers::pi * (static_cast<double>(level(rng)) / den);
  } else {
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    for (auto& p : phases) p = angle(rng);
  }
  return phases;
}

}  // namespace

OracleCheckReport verify_oracle(int max_qubits, int max_sequence, int trials, std::uint64_t seed) {
  if (max_qubits < 1 || max_qubits > 10) throw InvalidArgument("max qubits must lie in [1, 10]");
  if (max_sequence < 0 || max_sequence > fullsim::kMaxSequenceLength) {
    throw InvalidArgument("max sequence length must lie in [0, " +
                          std::to_string(fullsim::kMaxSequenceLength) + "]");
  }
  if (trials < 1) throw InvalidArgument("need at least one trial");
  std::mt19937_64 rng(seed);
  OracleCheckReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const auto phases = random_phases(rng, max_qubits, t % 2 == 1);
    std::vector<std::size_t> level_of;
    const auto h = std::make_shared<const PhaseHistogram>(histogram_from_phases(phases, &level_of));
    for (int m = 0; m <= max_sequence; ++m) {
      for (std::uint32_t bits = 0; bits < (1U << m); ++bits) {
        std::vector<std::uint8_t> outcomes(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) outcomes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((bits >> i) & 1U);
        const MeasurementSequence y(std::move(outcomes));
        ++report.sequences;

        std::optional<RunResult> classes;
        std::optional<fullsim::FullRun> full;
        try {
          classes = run_sequence(h, y);
        } catch (const ImpossibleOutcome&) {
        }
        try {
          full = fullsim::run_sequence_fullsim(phases, y);
        } catch (const ImpossibleOutcome&) {
        }
        const double closed = sequence_probability(*h, y.ones(), y.length());
        if (classes.has_value() != full.has_value()) {
          // One engine saw a zero branch the other did not: count it as a full
          // probability mismatch.
          const double p = classes ? classes->probability : full->probability;
          report.max_probability_deviation = std::max(report.max_probability_deviation, p);
          continue;
        }
        if (!full) {
          report.max_closed_form_deviation = std::max(report.max_closed_form_deviation, closed);
          continue;
        }
        report.max_probability_deviation =
            std::max(report.max_probability_deviation, std::abs(classes->probability - full->probability));
        report.max_closed_form_deviation =
            std::max(report.max_closed_form_deviation, std::abs(closed - full->probability));
        for (std::size_t x = 0; x < phases.size(); ++x) {
          const std::size_t k = level_of[x];
          const double per_x = classes->state.weight(k) / static_cast<double>(h->level(k).count);
          report.max_distribution_deviation =
              std::max(report.max_distribution_deviation, std::abs(per_x - full->distribution[x]));
        }
      }
    }
  }
  return report;
}

}  // namespace phase_amp
