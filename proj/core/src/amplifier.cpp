#include "phase_amp/amplifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phase_amp/errors.hpp"

namespace phase_amp {

namespace {

constexpr double kTailSlack = 1e-12;

double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

MeasurementSequence::MeasurementSequence(std::vector<std::uint8_t> outcomes)
    : outcomes_(std::move(outcomes)) {
  for (auto bit : outcomes_) {
    if (bit > 1) throw InvalidArgument("measurement outcomes must be 0 or 1");
    ones_ += bit;
  }
}

MeasurementSequence MeasurementSequence::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("measurement sequence may only contain '0' and '1', got '" +
                            std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return MeasurementSequence(std::move(bits));
}

MeasurementSequence MeasurementSequence::all_ones(int m) {
  if (m < 0) throw InvalidArgument("success count must be nonnegative");
  return MeasurementSequence(std::vector<std::uint8_t>(static_cast<std::size_t>(m), 1));
}

std::string MeasurementSequence::to_string() const {
  std::string out;
  out.reserve(outcomes_.size());
  for (auto bit : outcomes_) out.push_back(static_cast<char>('0' + bit));
  return out;
}

MeasurementSequence MeasurementSequence::appended(int outcome) const {
  if (outcome != 0 && outcome != 1) throw InvalidArgument("measurement outcome must be 0 or 1");
  MeasurementSequence next = *this;
  next.outcomes_.push_back(static_cast<std::uint8_t>(outcome));
  next.ones_ += outcome;
  return next;
}

double ClassState::sequence_probability() const { return std::exp(log_probability_); }

double success_factor(double theta) { return 0.5 * (1.0 - std::cos(theta)); }
double failure_factor(double theta) { return 0.5 * (1.0 + std::cos(theta)); }

ClassState initial_state(std::shared_ptr<const PhaseHistogram> h) {
  if (!h) throw InvalidArgument("initial_state needs a histogram");
  ClassState s;
  const double n = static_cast<double>(h->support());
  s.weights_.reserve(h->size());
  for (const auto& level : h->levels()) s.weights_.push_back(static_cast<double>(level.count) / n);
  s.histogram_ = std::move(h);
  return s;
}

ClassState initial_state(const PhaseHistogram& h) {
  return initial_state(std::make_shared<const PhaseHistogram>(h));
}

double success_probability(const ClassState& s) {
  double p = 0.0;
  const auto levels = s.histogram().levels();
  for (std::size_t k = 0; k < levels.size(); ++k) p += s.weights()[k] * success_factor(levels[k].theta);
  return p;
}

std::pair<ClassState, double> step(const ClassState& s, int outcome) {
  if (outcome != 0 && outcome != 1) throw InvalidArgument("measurement outcome must be 0 or 1");
  const auto levels = s.histogram().levels();
  ClassState next;
  next.histogram_ = s.histogram_;
  next.weights_.resize(levels.size());
  double p = 0.0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const double factor = outcome == 1 ? success_factor(levels[k].theta) : failure_factor(levels[k].theta);
    next.weights_[k] = s.weights_[k] * factor;
    p += next.weights_[k];
  }
  if (!(p > 0.0)) {
    throw ImpossibleOutcome("outcome " + std::to_string(outcome) + " has probability zero after '" +
                            s.history_.to_string() + "'");
  }
  for (auto& w : next.weights_) w /= p;
  next.history_ = s.history_.appended(outcome);
  next.log_probability_ = s.log_probability_ + std::log(p);
  return {std::move(next), p};
}

RunResult run_sequence(std::shared_ptr<const PhaseHistogram> h, const MeasurementSequence& y) {
  ClassState state = initial_state(std::move(h));
  for (auto outcome : y.outcomes()) state = step(state, outcome).first;
  const double log_p = state.log_sequence_probability();
  return {std::move(state), std::exp(log_p), log_p};
}

RunResult run_sequence(const PhaseHistogram& h, const MeasurementSequence& y) {
  return run_sequence(std::make_shared<const PhaseHistogram>(h), y);
}

RunResult success_run(std::shared_ptr<const PhaseHistogram> h, int m) {
  return run_sequence(std::move(h), MeasurementSequence::all_ones(m));
}

RunResult success_run(const PhaseHistogram& h, int m) {
  return success_run(std::make_shared<const PhaseHistogram>(h), m);
}

double log_sequence_probability(const PhaseHistogram& h, int ones, int length) {
  if (length < 0 || ones < 0 || ones > length) {
    throw InvalidArgument("sequence needs 0 <= ones <= length");
  }
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> terms;
  terms.reserve(h.size());
  for (const auto& level : h.levels()) {
    if (level.count == 0) continue;
    const double c = std::cos(level.theta);
    double t = std::log(static_cast<double>(level.count));
    if (ones > 0) t += ones * std::log1p(-c);
    if (length - ones > 0) t += (length - ones) * std::log1p(c);
    if (!std::isnan(t) && t > kNegInf) terms.push_back(t);
  }
  if (terms.empty()) return kNegInf;
  const double top = *std::max_element(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return top + std::log(sum) - length * std::log(2.0) - std::log(static_cast<double>(h.support()));
}

double sequence_probability(const PhaseHistogram& h, int ones, int length) {
  return std::exp(log_sequence_probability(h, ones, length));
}

double tail_probability(const ClassState& s, double theta) {
  const auto levels = s.histogram().levels();
  double mass = 0.0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].theta >= theta - kTailSlack) mass += s.weights()[k];
  }
  return std::min(mass, 1.0);
}

TailReport tail_report(const ClassState& s, double theta) {
  const double conditional = tail_probability(s, theta);
  return {theta, conditional, conditional * s.sequence_probability()};
}

Assignment sample_assignment(const ClassState& s, const ClassTable& table, std::mt19937_64& rng) {
  const auto& h = s.histogram();
  if (table.level_count() != h.size() || table.includes_zero() != h.includes_zero()) {
    throw InvalidArgument("class table does not match the state's histogram");
  }
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (table.members(k).size() != h.level(k).count) {
      throw InvalidArgument("class table does not match the state's histogram");
    }
  }
  const double u = to_unit_interval(rng());
  double cumulative = 0.0;
  std::size_t chosen = h.top_occupied_level();
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (s.weights()[k] <= 0.0) continue;
    cumulative += s.weights()[k];
    if (u < cumulative) {
      chosen = k;
      break;
    }
  }
  // Rounding can leave the cumulative sum just under 1; fall back to the last
  // level with positive weight.
  if (!(u < cumulative)) {
    for (std::size_t k = h.size(); k-- > 0;) {
      if (s.weights()[k] > 0.0) {
        chosen = k;
        break;
      }
    }
  }
  const auto members = table.members(chosen);
  return members[static_cast<std::size_t>(rng() % members.size())];
}

Assignment sample_assignment(const ClassState& s, const ClassTable& table, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_assignment(s, table, rng);
}

nlohmann::json run_report_json(const ClassState& s, std::optional<double> tail_theta) {
  nlohmann::json report = {{"schema_version", kSchemaVersion},
                           {"sequence", s.history().to_string()},
                           {"probability", s.sequence_probability()},
                           {"log_probability", s.log_sequence_probability()},
                           {"weights", std::vector<double>(s.weights().begin(), s.weights().end())}};
  if (tail_theta) {
    const auto tail = tail_report(s, *tail_theta);
    report["tail"] = {{"theta", tail.theta},
                      {"conditional", tail.conditional},
                      {"unconditional", tail.unconditional}};
  }
  return report;
}

}  // namespace phase_amp
