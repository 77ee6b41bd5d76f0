#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phase_amp/graphs.hpp"
#include "phase_amp/two_peak_model.hpp"

namespace phase_amp {

// Exact grid phase k*pi/denominator.
struct GridPhase {
  int k = 0;
  int denominator = 1;
  double radians() const;
  friend bool operator==(const GridPhase&, const GridPhase&) = default;
};

// Maps an assignment to pi * f(x) / |E|, f being the cut size or the number of
// covered edges. Throws InvalidArgument for an edgeless graph or x >= 2^n.
GridPhase phase_of(const Graph& g, ObjectiveKind kind, Assignment x);

struct PhaseLevel {
  std::optional<int> k;  // set when the level is k*pi/denominator
  double theta = 0.0;
  std::uint64_t count = 0;
};

// Number of assignments per phase level, g(theta_k). Levels are strictly
// increasing in angle. Unshifted histograms keep all angles within [0, pi].
class PhaseHistogram {
 public:
  // Arbitrary sorted angles in [0, pi]; zero counts are allowed but the total
  // must be positive.
  static PhaseHistogram from_angles(std::vector<double> thetas, std::vector<std::uint64_t> counts);
  // Levels k*pi/denominator for k = first_k..denominator.
  static PhaseHistogram on_grid(int denominator, std::vector<std::uint64_t> counts,
                                bool includes_zero, int first_k = 0);

  std::span<const PhaseLevel> levels() const { return levels_; }
  const PhaseLevel& level(std::size_t i) const { return levels_.at(i); }
  std::size_t size() const { return levels_.size(); }
  std::uint64_t support() const { return support_; }
  std::optional<int> denominator() const { return denominator_; }
  bool includes_zero() const { return includes_zero_; }
  double shift() const { return shift_; }

  // Highest level with a nonzero count.
  std::size_t top_occupied_level() const;
  // Level with the largest count (lowest index on ties).
  std::size_t mode_level() const;
  double mean_phase() const;

  friend PhaseHistogram shift_phases(const PhaseHistogram& h, double xi);

 private:
  PhaseHistogram() = default;
  void finish(bool check_range);

  std::optional<int> denominator_;
  std::vector<PhaseLevel> levels_;
  std::uint64_t support_ = 0;
  bool includes_zero_ = false;
  double shift_ = 0.0;
};

// Histogram of assignments x in [1, 2^n) over levels k*pi/|E|; include_zero
// also counts x = 0 at level 0 so the total is 2^n.
PhaseHistogram build_histogram(const Graph& g, ObjectiveKind kind, bool include_zero = false);

// Groups an explicit phase list (one entry per x = 1..N, each in [0, pi]) by
// exact value. level_of, when given, receives each entry's level index.
PhaseHistogram histogram_from_phases(std::span<const double> phases,
                                     std::vector<std::size_t>* level_of = nullptr);

// N levels k*pi/N, k = 1..N, one assignment each.
PhaseHistogram uniform_histogram(std::uint64_t n);

// Adds xi to every level angle. Counts are unchanged; weight formulas use
// cos(theta + xi) directly. Grid labels are dropped since the angles leave the
// k*pi/denominator grid.
PhaseHistogram shift_phases(const PhaseHistogram& h, double xi);

// Two levels alpha_l < alpha_u with counts round(q_l * n) and the remainder.
PhaseHistogram two_peak_histogram(const TwoPeakModel& model, std::uint64_t n);

// Assignment -> level index lookup for graphs small enough to materialize.
class ClassTable {
 public:
  static constexpr int kMaxVertices = 20;

  // Throws ResourceLimit above kMaxVertices. include_zero must match the
  // histogram the table is paired with.
  ClassTable(const Graph& g, ObjectiveKind kind, bool include_zero = false);

  int vertex_count() const { return n_vertices_; }
  bool includes_zero() const { return includes_zero_; }
  std::size_t class_of(Assignment x) const;
  // Assignments in the support with the given level, ascending.
  std::span<const std::uint32_t> members(std::size_t level) const;
  std::size_t level_count() const { return offsets_.size() - 1; }

 private:
  int n_vertices_;
  bool includes_zero_;
  std::vector<std::uint16_t> class_of_;
  std::vector<std::uint32_t> sorted_;
  std::vector<std::size_t> offsets_;
};

inline constexpr const char* kSchemaVersion = "phase-amp/1";

nlohmann::json to_json(const PhaseHistogram& h);
// Columns theta,count.
std::string to_csv(const PhaseHistogram& h);

}  // namespace phase_amp
