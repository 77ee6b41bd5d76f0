#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "phase_amp/amplifier.hpp"
#include "phase_amp/errors.hpp"

using namespace phase_amp;

namespace {

std::vector<double> phases_of(const PhaseHistogram& h) {
  std::vector<double> out;
  for (const auto& l : h.levels())
    for (std::uint64_t i = 0; i < l.count; ++i) out.push_back(l.theta);
  return out;
}

}  // namespace

TEST_CASE("measurement sequences") {
  const auto y = MeasurementSequence::parse("1101");
  CHECK(y.length() == 4);
  CHECK(y.ones() == 3);
  CHECK(y.to_string() == "1101");
  CHECK(y.appended(0).to_string() == "11010");
  CHECK(MeasurementSequence::all_ones(3).to_string() == "111");
  CHECK(MeasurementSequence::parse("").length() == 0);
  CHECK_THROWS_AS(MeasurementSequence::parse("102"), InvalidArgument);
  CHECK_THROWS_AS(MeasurementSequence({0, 2}), InvalidArgument);
  CHECK_THROWS_AS(MeasurementSequence::all_ones(-1), InvalidArgument);
}

TEST_CASE("factors") {
  CHECK(success_factor(0.0) == 0.0);
  CHECK(success_factor(oracle::kPi) == 1.0);
  CHECK(failure_factor(oracle::kPi) == 0.0);
  CHECK(success_factor(1.2) + failure_factor(1.2) == doctest::Approx(1.0));
}

TEST_CASE("class weights reproduce the per-assignment amplitude oracle") {
  const auto h = build_histogram(make_line(5), ObjectiveKind::kMaxCut);
  const auto phases = phases_of(h);
  for (const std::string y : {"1", "0", "10", "0110", "111", "10101"}) {
    const auto run = run_sequence(h, MeasurementSequence::parse(y));
    CHECK(run.probability == doctest::Approx(oracle::sequence_probability(phases, y)).epsilon(1e-12));
    const auto cond = oracle::conditional(phases, y);
    std::size_t i = 0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      double mass = 0.0;
      for (std::uint64_t c = 0; c < h.level(k).count; ++c) mass += cond[i++];
      CHECK(run.state.weight(k) == doctest::Approx(mass).epsilon(1e-12));
    }
  }
}

TEST_CASE("closed form matches stepping") {
  const auto h = build_histogram(make_grid(3, 3), ObjectiveKind::kMaxCut);
  const auto y = MeasurementSequence::parse("1101001");
  const auto run = run_sequence(h, y);
  CHECK(sequence_probability(h, y.ones(), y.length()) == doctest::Approx(run.probability).epsilon(1e-12));
  CHECK(std::exp(log_sequence_probability(h, 4, 7)) == doctest::Approx(run.probability).epsilon(1e-12));
  CHECK(run.log_probability == doctest::Approx(std::log(run.probability)));
  CHECK(run.state.history() == y);
}

TEST_CASE("step reports the outcome probability") {
  const auto h = build_histogram(make_line(4), ObjectiveKind::kMaxCut);
  const auto s0 = initial_state(h);
  const auto [s1, p1] = step(s0, 1);
  CHECK(p1 == doctest::Approx(success_probability(s0)));
  const auto [s0b, p0] = step(s0, 0);
  CHECK(p0 + p1 == doctest::Approx(1.0));
  CHECK(s1.sequence_probability() == doctest::Approx(p1));
  CHECK_THROWS_AS(step(s0, 2), InvalidArgument);
}

TEST_CASE("impossible outcomes are rejected") {
  // Only phase pi present: failure has probability zero.
  const auto h = PhaseHistogram::from_angles({oracle::kPi}, {3});
  CHECK_THROWS_AS(step(initial_state(h), 0), ImpossibleOutcome);
  const auto z = PhaseHistogram::from_angles({0.0}, {1});
  CHECK_THROWS_AS(success_run(z, 1), ImpossibleOutcome);
  CHECK(sequence_probability(z, 1, 1) == 0.0);
}

TEST_CASE("line:2 two successes leave only the cut assignments") {
  const auto h = build_histogram(make_line(2), ObjectiveKind::kMaxCut);
  const auto run = success_run(h, 2);
  CHECK(run.probability == doctest::Approx(2.0 / 3.0));
  CHECK(run.state.weight(1) == 1.0);
}

TEST_CASE("tails") {
  const auto h = build_histogram(make_grid(4, 4), ObjectiveKind::kMaxCut);
  const auto run = success_run(h, 10);
  CHECK(tail_probability(run.state, 0.0) == doctest::Approx(1.0));
  CHECK(tail_probability(run.state, oracle::kPi) == doctest::Approx(run.state.weight(24)));
  const auto r = tail_report(run.state, oracle::kPi);
  CHECK(r.unconditional == doctest::Approx(r.conditional * run.probability));
}

TEST_CASE("sampling follows the class weights") {
  const auto g = make_grid(3, 3);
  const auto h = std::make_shared<const PhaseHistogram>(build_histogram(g, ObjectiveKind::kMaxCut));
  const ClassTable table(g, ObjectiveKind::kMaxCut);
  const auto run = success_run(h, 6);
  std::mt19937_64 rng(11);
  std::vector<double> freq(h->size(), 0.0);
  const int n = 40000;
  for (int i = 0; i < n; ++i) freq[table.class_of(sample_assignment(run.state, table, rng))] += 1.0 / n;
  for (std::size_t k = 0; k < h->size(); ++k) CHECK(std::abs(freq[k] - run.state.weight(k)) < 0.01);
  CHECK(sample_assignment(run.state, table, 5) == sample_assignment(run.state, table, 5));
  const ClassTable other(make_line(4), ObjectiveKind::kMaxCut);
  CHECK_THROWS_AS(sample_assignment(run.state, other, 5), InvalidArgument);
}

TEST_CASE("run report json") {
  const auto h = build_histogram(make_line(4), ObjectiveKind::kMaxCut);
  const auto j = run_report_json(success_run(h, 2).state, oracle::kPi);
  CHECK(j["sequence"] == "11");
  CHECK(j.contains("tail"));
  CHECK(j["schema_version"] == kSchemaVersion);
}
