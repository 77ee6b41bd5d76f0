#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phase_amp/amplifier.hpp"
#include "phase_amp/graphs.hpp"
#include "phase_amp/svg.hpp"

namespace phase_amp::experiments {

inline constexpr const char* kToolVersion = "0.1.0";

struct IterationRecord {
  int m = 0;
  std::optional<double> p_individual;  // success probability of the m-th measurement; none at m = 0
  double p_sequence = 1.0;             // probability of m consecutive successes
  double p_optimal = 0.0;              // conditional mass on the optimal level
  std::vector<double> tails;           // conditional tails at RunReport::tail_thetas
};

struct RunReport {
  std::string graph;  // spec string, e.g. "grid:4x4"
  ObjectiveKind objective = ObjectiveKind::kMaxCut;
  int vertex_count = 0;
  int edge_count = 0;
  int optimal_k = 0;  // highest occupied level
  std::uint64_t optimal_count = 0;
  std::vector<double> tail_thetas;
  std::vector<IterationRecord> records;
};

// Conditional dynamics under 0..max_m consecutive successes.
RunReport amplification_report(const std::string& graph_spec, ObjectiveKind kind, int max_m,
                               std::vector<double> tail_thetas = {});

// Fixed columns: m,p_individual,P_sequence,p_optimal_conditional.
std::string to_csv(const RunReport& report);
nlohmann::json to_json(const RunReport& report);

// Optimal-solution probability vs successes for line graphs.
std::vector<RunReport> fig1a(const std::vector<int>& line_sizes, int max_m);
// Individual and sequence success probabilities per graph.
std::vector<RunReport> fig1b_fig1c(const std::vector<std::string>& graph_specs, int max_m);

struct HistogramFigure {
  std::string graph;
  PhaseHistogram histogram;
};
// Phase landscapes g(theta_k), counted with x = 0 included (total 2^n).
std::vector<HistogramFigure> fig2(const std::vector<std::string>& graph_specs);

struct AmplifiedHistogram {
  std::string graph;
  int m = 0;
  PhaseHistogram base;
  std::vector<double> scaled;  // 2^n times the conditional level probabilities
  std::size_t base_mode = 0;
  std::size_t amplified_mode = 0;

  double base_mode_theta() const { return base.level(base_mode).theta; }
  double amplified_mode_theta() const { return base.level(amplified_mode).theta; }
};
AmplifiedHistogram fig3(const std::string& graph_spec, int m);

struct GridTable {
  std::string graph;
  int m = 0;
  double initial_optimal = 0.0;
  double optimal_after = 0.0;
  double run_probability = 0.0;
  // Expected classical checks per optimal hit: 1/p for direct sampling and
  // for sampling the amplified state.
  double checks_sampling = 0.0;
  double checks_amplified = 0.0;
  double check_fraction = 0.0;  // checks_amplified / checks_sampling
  // Expected preparations of the initial state per optimal hit on the
  // amplified route (1 / (P_m * p_opt)).
  double preparations_amplified = 0.0;
  int samples = 0;
  int optimal_hits = 0;  // seeded draws from the amplified state landing on an optimum
};
GridTable grid_table(const std::string& graph_spec = "grid:4x4", int m = 10, int samples = 4000,
                     std::uint64_t seed = 1);
nlohmann::json to_json(const GridTable& table);

enum class Format { kCsv, kJson, kSvg };
Format parse_format(const std::string& text);
std::set<Format> parse_formats(const std::string& csv_list);

enum class ExperimentId { kFig1a, kFig1b, kFig1c, kFig2, kFig3, kGridTable, kCustom };
ExperimentId parse_experiment(const std::string& text);
std::string to_string(ExperimentId id);

struct ExperimentConfig {
  ExperimentId id = ExperimentId::kGridTable;
  std::vector<std::string> graphs;  // empty: the experiment's defaults
  int min_m = 0;
  std::optional<int> max_m;  // default 60 for fig1*/custom, 10 for fig3/grid-table
  std::filesystem::path out_dir = "out";
  std::set<Format> formats = {Format::kCsv, Format::kJson, Format::kSvg};
  std::uint64_t seed = 1;
  ObjectiveKind objective = ObjectiveKind::kMaxCut;

  // Throws InvalidArgument on a negative or inverted range or no formats.
  void validate() const;
};

// Runs one experiment and writes its files into config.out_dir. Returns the
// written paths in creation order.
std::vector<std::filesystem::path> run_experiment(const ExperimentConfig& config);

// Provenance block embedded in every JSON report.
nlohmann::json provenance(const std::string& graph, ObjectiveKind kind, std::uint64_t seed);

}  // namespace phase_amp::experiments
