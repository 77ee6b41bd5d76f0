#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "phase_amp/encoding.hpp"
#include "phase_amp/errors.hpp"

using namespace phase_amp;

namespace {
std::vector<std::uint64_t> counts_of(const PhaseHistogram& h) {
  std::vector<std::uint64_t> out;
  for (const auto& l : h.levels()) out.push_back(l.count);
  return out;
}
}  // namespace

TEST_CASE("phase of an assignment") {
  const auto g = make_line(4);
  const auto p = phase_of(g, ObjectiveKind::kMaxCut, 0b0101);
  CHECK(p.k == 3);
  CHECK(p.denominator == 3);
  CHECK(p.radians() == oracle::kPi);
  CHECK_THROWS_AS(phase_of(g, ObjectiveKind::kMaxCut, 16), InvalidArgument);
  CHECK_THROWS_AS(phase_of(Graph(2, {}), ObjectiveKind::kMaxCut, 1), InvalidArgument);
}

TEST_CASE("frozen histograms") {
  CHECK(counts_of(build_histogram(make_line(10), ObjectiveKind::kMaxCut)) ==
        std::vector<std::uint64_t>{1, 18, 72, 168, 252, 252, 168, 72, 18, 2});
  CHECK(counts_of(build_histogram(make_line(4), ObjectiveKind::kMaxCut)) ==
        std::vector<std::uint64_t>{1, 6, 6, 2});
  CHECK(counts_of(build_histogram(make_star_ring(16), ObjectiveKind::kMaxCut)) ==
        std::vector<std::uint64_t>{1, 0, 0, 30, 30, 30, 210, 360, 480, 1120, 1980, 2820, 4360, 6300, 7920,
                                   9288, 9870, 8880, 6500, 3630, 1386, 310, 30, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto grid = build_histogram(make_grid(4, 4), ObjectiveKind::kMaxCut);
  CHECK(grid.support() == 65535);
  CHECK(grid.level(24).count == 2);
  CHECK(grid.top_occupied_level() == 24);
}

TEST_CASE("histogram counts agree with the enumeration oracle") {
  const auto edges = oracle::grid_edges(3, 4);
  const auto expected = oracle::cut_counts(12, edges, 0);
  CHECK(counts_of(build_histogram(make_grid(3, 4), ObjectiveKind::kMaxCut, true)) == expected);
}

TEST_CASE("include-zero adds x = 0 to level 0") {
  const auto a = build_histogram(make_grid(3, 3), ObjectiveKind::kMaxCut, false);
  const auto b = build_histogram(make_grid(3, 3), ObjectiveKind::kMaxCut, true);
  CHECK(b.support() == 512);
  CHECK(b.level(0).count == a.level(0).count + 1);
  CHECK(b.includes_zero());
}

TEST_CASE("complement symmetry of cut histograms") {
  for (const auto& g : {make_line(9), make_grid(3, 3), make_star_ring(10)}) {
    const auto h = build_histogram(g, ObjectiveKind::kMaxCut);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (k == 0) CHECK(h.level(k).count % 2 == 1);
      else CHECK(h.level(k).count % 2 == 0);
    }
  }
}

TEST_CASE("mode and mean") {
  const auto sr = build_histogram(make_star_ring(16), ObjectiveKind::kMaxCut);
  CHECK(sr.mode_level() == 16);
  CHECK(sr.mean_phase() > oracle::kPi / 2);
  CHECK(sr.level(sr.mode_level()).theta > oracle::kPi / 2);
  const auto grid = build_histogram(make_grid(4, 4), ObjectiveKind::kMaxCut);
  CHECK(grid.level(grid.mode_level()).theta == doctest::Approx(oracle::kPi / 2));
}

TEST_CASE("histogram construction is validated") {
  CHECK_THROWS_AS(PhaseHistogram::from_angles({1.0, 0.5}, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(PhaseHistogram::from_angles({-0.1}, {1}), InvalidArgument);
  CHECK_THROWS_AS(PhaseHistogram::from_angles({0.5}, {0}), InvalidArgument);
  CHECK_THROWS_AS(PhaseHistogram::from_angles({0.5, 1.0}, {1}), InvalidArgument);
  const auto shifted = shift_phases(PhaseHistogram::from_angles({3.0}, {2}), 1.0);
  CHECK(shifted.level(0).theta == doctest::Approx(4.0));
  CHECK(shifted.shift() == 1.0);
  CHECK_FALSE(shifted.level(0).k.has_value());
}

TEST_CASE("uniform and phase-list histograms") {
  const auto u = uniform_histogram(4);
  CHECK(u.size() == 4);
  CHECK(u.level(0).theta == doctest::Approx(oracle::kPi / 4));
  CHECK(u.level(3).theta == oracle::kPi);
  std::vector<double> phases{0.5, 1.0, 0.5, 2.0};
  std::vector<std::size_t> level_of;
  const auto h = histogram_from_phases(phases, &level_of);
  CHECK(h.size() == 3);
  CHECK(h.level(0).count == 2);
  CHECK(level_of == std::vector<std::size_t>{0, 1, 0, 2});
}

TEST_CASE("class table agrees with phase_of on random assignments") {
  const auto g = make_grid(4, 4);
  const ClassTable table(g, ObjectiveKind::kMaxCut);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Assignment x = 1 + rng() % (g.assignment_count() - 1);
    REQUIRE(table.class_of(x) == static_cast<std::size_t>(phase_of(g, ObjectiveKind::kMaxCut, x).k));
  }
  const auto h = build_histogram(g, ObjectiveKind::kMaxCut);
  for (std::size_t k = 0; k < table.level_count(); ++k) CHECK(table.members(k).size() == h.level(k).count);
  CHECK_THROWS_AS(ClassTable(make_line(21), ObjectiveKind::kMaxCut), ResourceLimit);
}

TEST_CASE("serialization") {
  const auto h = build_histogram(make_line(3), ObjectiveKind::kMaxCut);
  const auto j = to_json(h);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["levels"].size() == 3);
  CHECK(j["support"] == 7);
  CHECK(to_csv(h).rfind("theta,count\n", 0) == 0);
}
