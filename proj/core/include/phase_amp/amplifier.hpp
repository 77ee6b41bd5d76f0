#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "phase_amp/encoding.hpp"

namespace phase_amp {

// Outcome record of successive P_0b measurements, in chronological order.
// A 1 keeps the a-register branch, a 0 keeps the b-register branch.
class MeasurementSequence {
 public:
  MeasurementSequence() = default;
  explicit MeasurementSequence(std::vector<std::uint8_t> outcomes);
  // Parses a string of '0'/'1' characters, first character first.
  static MeasurementSequence parse(std::string_view text);
  static MeasurementSequence all_ones(int m);

  int length() const { return static_cast<int>(outcomes_.size()); }
  int ones() const { return ones_; }
  std::span<const std::uint8_t> outcomes() const { return outcomes_; }
  std::string to_string() const;
  MeasurementSequence appended(int outcome) const;

  friend bool operator==(const MeasurementSequence&, const MeasurementSequence&) = default;

 private:
  std::vector<std::uint8_t> outcomes_;
  int ones_ = 0;
};

// Exact state of the protocol compressed to one weight per phase level: w_k is
// the computational-basis probability mass of level k given the history.
// Values are immutable; step() returns a new state.
class ClassState {
 public:
  const PhaseHistogram& histogram() const { return *histogram_; }
  std::shared_ptr<const PhaseHistogram> histogram_ptr() const { return histogram_; }
  std::span<const double> weights() const { return weights_; }
  double weight(std::size_t level) const { return weights_.at(level); }
  const MeasurementSequence& history() const { return history_; }
  // Log of the joint probability of the history.
  double log_sequence_probability() const { return log_probability_; }
  double sequence_probability() const;

 private:
  friend ClassState initial_state(std::shared_ptr<const PhaseHistogram> h);
  friend std::pair<ClassState, double> step(const ClassState& s, int outcome);

  std::shared_ptr<const PhaseHistogram> histogram_;
  std::vector<double> weights_;
  MeasurementSequence history_;
  double log_probability_ = 0.0;
};

// Per-level branch factors (1 - cos theta)/2 and (1 + cos theta)/2.
double success_factor(double theta);
double failure_factor(double theta);

// w_k = g_k / N, empty history.
ClassState initial_state(std::shared_ptr<const PhaseHistogram> h);
ClassState initial_state(const PhaseHistogram& h);

// Probability that the next measurement yields 1.
double success_probability(const ClassState& s);

// Applies one interference round and conditions on `outcome` (0 or 1).
// Returns the post-measurement state and the branch probability. Throws
// ImpossibleOutcome when that branch has probability zero.
std::pair<ClassState, double> step(const ClassState& s, int outcome);

struct RunResult {
  ClassState state;
  double probability = 0.0;
  double log_probability = 0.0;
};

RunResult run_sequence(const PhaseHistogram& h, const MeasurementSequence& y);
RunResult run_sequence(std::shared_ptr<const PhaseHistogram> h, const MeasurementSequence& y);
// m consecutive successes.
RunResult success_run(std::shared_ptr<const PhaseHistogram> h, int m);
RunResult success_run(const PhaseHistogram& h, int m);

// Closed form p(y) = (1/(2^m N)) sum_k g_k (1-cos)^q (1+cos)^(m-q), evaluated
// directly from the histogram in log space. Depends on y only through (m, q).
double log_sequence_probability(const PhaseHistogram& h, int ones, int length);
double sequence_probability(const PhaseHistogram& h, int ones, int length);

// Conditional mass on levels with theta_k >= theta. Levels within 1e-12 rad
// below theta count as reaching it, so grid thresholds like pi are robust.
double tail_probability(const ClassState& s, double theta);

struct TailReport {
  double theta = 0.0;
  double conditional = 0.0;
  double unconditional = 0.0;
};
TailReport tail_report(const ClassState& s, double theta);

// Draws a level with probability w_k, then a uniform member of it.
// Throws InvalidArgument when the table does not match the histogram.
Assignment sample_assignment(const ClassState& s, const ClassTable& table, std::mt19937_64& rng);
Assignment sample_assignment(const ClassState& s, const ClassTable& table, std::uint64_t seed);

// { "schema_version", "sequence", "probability", "log_probability", "weights",
//   "tail": { "theta", "conditional", "unconditional" } }
nlohmann::json run_report_json(const ClassState& s, std::optional<double> tail_theta);

}  // namespace phase_amp
