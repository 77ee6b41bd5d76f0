#include "phase_amp/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

#include "parallel_chunks.hpp"
#include "phase_amp/errors.hpp"

namespace phase_amp {

namespace {

constexpr double kPi = std::numbers::pi;

// k/den is exactly 1 when k == den, so the top level lands on pi exactly.
double grid_angle(int k, int denominator) {
  return kPi * (static_cast<double>(k) / static_cast<double>(denominator));
}

void require_encodable(const Graph& g) {
  if (g.edge_count() < 1) {
    throw InvalidArgument("phase encoding needs at least one edge (alpha = pi/|E|)");
  }
}

}  // namespace

double GridPhase::radians() const { return grid_angle(k, denominator); }

GridPhase phase_of(const Graph& g, ObjectiveKind kind, Assignment x) {
  require_encodable(g);
  if (x > g.full_mask()) {
    throw InvalidArgument("assignment " + std::to_string(x) + " exceeds 2^" +
                          std::to_string(g.vertex_count()));
  }
  return {objective_value(g, kind, x), g.edge_count()};
}

PhaseHistogram PhaseHistogram::from_angles(std::vector<double> thetas,
                                           std::vector<std::uint64_t> counts) {
  if (thetas.size() != counts.size()) {
    throw InvalidArgument("histogram needs one count per angle");
  }
  PhaseHistogram h;
  h.levels_.reserve(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    h.levels_.push_back({std::nullopt, thetas[i], counts[i]});
  }
  h.finish(true);
  return h;
}

PhaseHistogram PhaseHistogram::on_grid(int denominator, std::vector<std::uint64_t> counts,
                                       bool includes_zero, int first_k) {
  if (denominator < 1) throw InvalidArgument("grid denominator must be positive");
  if (first_k < 0 || first_k > denominator) throw InvalidArgument("grid first level out of range");
  if (counts.size() != static_cast<std::size_t>(denominator - first_k) + 1) {
    throw InvalidArgument("grid histogram needs one count per level k = first_k..denominator");
  }
  PhaseHistogram h;
  h.denominator_ = denominator;
  h.includes_zero_ = includes_zero;
  for (int k = first_k; k <= denominator; ++k) {
    h.levels_.push_back({k, grid_angle(k, denominator), counts[static_cast<std::size_t>(k - first_k)]});
  }
  h.finish(true);
  return h;
}

void PhaseHistogram::finish(bool check_range) {
  if (levels_.empty()) throw InvalidArgument("histogram has no levels");
  support_ = 0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const double theta = levels_[i].theta;
    if (!std::isfinite(theta)) throw InvalidArgument("histogram angle is not finite");
    if (check_range && (theta < 0.0 || theta > kPi)) {
      throw InvalidArgument("histogram angle " + std::to_string(theta) + " outside [0, pi]");
    }
    if (i > 0 && !(theta > levels_[i - 1].theta)) {
      throw InvalidArgument("histogram angles must be strictly increasing");
    }
    support_ += levels_[i].count;
  }
  if (support_ == 0) throw InvalidArgument("histogram is empty (all counts zero)");
}

std::size_t PhaseHistogram::top_occupied_level() const {
  for (std::size_t i = levels_.size(); i-- > 0;) {
    if (levels_[i].count > 0) return i;
  }
  return 0;  // unreachable: support > 0
}

std::size_t PhaseHistogram::mode_level() const {
  auto it = std::max_element(levels_.begin(), levels_.end(),
                             [](const auto& a, const auto& b) { return a.count < b.count; });
  return static_cast<std::size_t>(it - levels_.begin());
}

double PhaseHistogram::mean_phase() const {
  double sum = 0.0;
  for (const auto& level : levels_) sum += level.theta * static_cast<double>(level.count);
  return sum / static_cast<double>(support_);
}

PhaseHistogram build_histogram(const Graph& g, ObjectiveKind kind, bool include_zero) {
  require_encodable(g);
  if (g.vertex_count() > kMaxEnumerationVertices) {
    throw ResourceLimit("histogram enumeration is capped at " +
                        std::to_string(kMaxEnumerationVertices) + " vertices");
  }
  const auto levels = static_cast<std::size_t>(g.edge_count()) + 1;
  auto partials = detail::map_chunks<std::vector<std::uint64_t>>(
      1, g.assignment_count(), [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> counts(levels, 0);
        for (Assignment x = lo; x < hi; ++x) ++counts[static_cast<std::size_t>(objective_value(g, kind, x))];
        return counts;
      });
  std::vector<std::uint64_t> counts(levels, 0);
  for (const auto& part : partials) {
    for (std::size_t k = 0; k < levels; ++k) counts[k] += part[k];
  }
  if (include_zero) ++counts[0];
  return PhaseHistogram::on_grid(g.edge_count(), std::move(counts), include_zero);
}

PhaseHistogram histogram_from_phases(std::span<const double> phases, std::vector<std::size_t>* level_of) {
  if (phases.empty()) throw InvalidArgument("phase list is empty");
  std::vector<double> distinct(phases.begin(), phases.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint64_t> counts(distinct.size(), 0);
  if (level_of) level_of->resize(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const auto k = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), phases[i]) -
                                            distinct.begin());
    ++counts[k];
    if (level_of) (*level_of)[i] = k;
  }
  return PhaseHistogram::from_angles(std::move(distinct), std::move(counts));
}

PhaseHistogram uniform_histogram(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("uniform histogram needs N >= 1");
  if (n > (std::uint64_t{1} << 26)) throw ResourceLimit("uniform histogram capped at 2^26 levels");
  return PhaseHistogram::on_grid(static_cast<int>(n), std::vector<std::uint64_t>(n, 1), false, 1);
}

PhaseHistogram shift_phases(const PhaseHistogram& h, double xi) {
  if (!std::isfinite(xi)) throw InvalidArgument("shift must be finite");
  if (xi == 0.0) return h;
  PhaseHistogram out;
  out.includes_zero_ = h.includes_zero_;
  out.shift_ = h.shift_ + xi;
  out.levels_.reserve(h.levels_.size());
  for (const auto& level : h.levels_) out.levels_.push_back({std::nullopt, level.theta + xi, level.count});
  out.finish(false);
  return out;
}

PhaseHistogram two_peak_histogram(const TwoPeakModel& model, std::uint64_t n) {
  const auto lower = static_cast<std::uint64_t>(std::llround(model.q_lower() * static_cast<double>(n)));
  if (n < 2 || lower == 0 || lower >= n) {
    throw InvalidArgument("N = " + std::to_string(n) + " too small to hold both peaks");
  }
  return PhaseHistogram::from_angles({model.alpha_lower, model.alpha_upper}, {lower, n - lower});
}

ClassTable::ClassTable(const Graph& g, ObjectiveKind kind, bool include_zero)
    : n_vertices_(g.vertex_count()), includes_zero_(include_zero) {
  if (g.vertex_count() > kMaxVertices) {
    throw ResourceLimit("assignment-level tables are limited to " + std::to_string(kMaxVertices) +
                        " vertices");
  }
  require_encodable(g);
  const std::uint64_t size = g.assignment_count();
  const auto levels = static_cast<std::size_t>(g.edge_count()) + 1;
  class_of_.resize(size);
  offsets_.assign(levels + 1, 0);
  for (Assignment x = 0; x < size; ++x) {
    const auto k = static_cast<std::uint16_t>(objective_value(g, kind, x));
    class_of_[x] = k;
    ++offsets_[k + 1];
  }
  const Assignment first = include_zero ? 0 : 1;
  if (!include_zero) --offsets_[1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  sorted_.resize(size - first);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (Assignment x = first; x < size; ++x) sorted_[cursor[class_of_[x]]++] = static_cast<std::uint32_t>(x);
}

std::size_t ClassTable::class_of(Assignment x) const {
  if (x >= class_of_.size()) throw InvalidArgument("assignment out of range for class table");
  return class_of_[x];
}

std::span<const std::uint32_t> ClassTable::members(std::size_t level) const {
  if (level + 1 >= offsets_.size()) throw InvalidArgument("level out of range for class table");
  return std::span<const std::uint32_t>(sorted_).subspan(offsets_[level],
                                                         offsets_[level + 1] - offsets_[level]);
}

nlohmann::json to_json(const PhaseHistogram& h) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : h.levels()) {
    levels.push_back({{"k", level.k ? nlohmann::json(*level.k) : nlohmann::json(nullptr)},
                      {"theta", level.theta},
                      {"count", level.count}});
  }
  return {{"schema_version", kSchemaVersion},
          {"denominator", h.denominator() ? nlohmann::json(*h.denominator()) : nlohmann::json(nullptr)},
          {"levels", std::move(levels)},
          {"support", h.support()},
          {"includes_zero", h.includes_zero()}};
}

std::string to_csv(const PhaseHistogram& h) {
  std::ostringstream out;
  out << "theta,count\n";
  char buf[64];
  for (const auto& level : h.levels()) {
    std::snprintf(buf, sizeof buf, "%.17g", level.theta);
    out << buf << ',' << level.count << '\n';
  }
  return out.str();
}

}  // namespace phase_amp
