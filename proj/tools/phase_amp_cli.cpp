// phase-amp: command-line front end for the phase amplification toolkit.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phase_amp/amplifier.hpp"
#include "phase_amp/analytics.hpp"
#include "phase_amp/encoding.hpp"
#include "phase_amp/errors.hpp"
#include "phase_amp/experiments.hpp"
#include "phase_amp/graphs.hpp"
#include "phase_amp/oracle_check.hpp"

namespace pa = phase_amp;
namespace ex = phase_amp::experiments;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

// Accepts plain radians or multiples of pi: "pi", "pi/2", "3pi/4", "0.75pi".
double parse_angle(const std::string& text) {
  const auto pos = text.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      throw pa::InvalidArgument("cannot parse angle '" + text + "'");
    }
    if (used != text.size()) throw pa::InvalidArgument("cannot parse angle '" + text + "'");
    return value;
  }
  double factor = 1.0;
  const std::string head = text.substr(0, pos);
  if (!head.empty() && head != "+") {
    factor = head == "-" ? -1.0 : std::stod(head);
  }
  std::string tail = text.substr(pos + 2);
  if (!tail.empty()) {
    if (tail.front() != '/') throw pa::InvalidArgument("cannot parse angle '" + text + "'");
    const double den = std::stod(tail.substr(1));
    if (den == 0.0) throw pa::InvalidArgument("angle denominator is zero");
    factor /= den;
  }
  return factor * kPi;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Globals {
  std::string out_dir = "out";
  std::string formats = "csv,json,svg";
  std::uint64_t seed = 1;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase amplification by interference and post-selected measurement"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--out", globals.out_dir, "Output directory for generated files");
  app.add_option("--format", globals.formats, "Comma-separated output formats: csv,json,svg");
  app.add_option("--seed", globals.seed, "Random seed");

  std::string graph_spec;
  std::string objective = "maxcut";

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Print a graph in the text format");
  bool with_optima = false;
  graph_cmd->add_option("--graph", graph_spec, "line:Q, grid:RxC, starring:Q or a graph file")->required();
  graph_cmd->add_option("--objective", objective, "maxcut or cover");
  graph_cmd->add_flag("--optima", with_optima, "Also report brute-force optima as JSON");

  // hist
  auto* hist_cmd = app.add_subcommand("hist", "Phase histogram g(theta_k) of a graph encoding");
  bool include_zero = false;
  std::optional<std::uint64_t> uniform_n;
  hist_cmd->add_option("--graph", graph_spec, "Graph spec or file");
  hist_cmd->add_option("--uniform", uniform_n, "Uniform synthetic histogram with N levels instead of a graph");
  hist_cmd->add_option("--objective", objective, "maxcut or cover");
  hist_cmd->add_flag("--include-zero", include_zero, "Count x = 0 so the total is 2^n");

  // amplify
  auto* amp_cmd = app.add_subcommand("amplify", "Run a measurement record through the amplifier");
  std::string sequence;
  std::optional<int> successes;
  std::string tail_at;
  int samples = 0;
  amp_cmd->add_option("--graph", graph_spec, "Graph spec or file");
  amp_cmd->add_option("--uniform", uniform_n, "Use a uniform synthetic histogram with N levels");
  amp_cmd->add_option("--objective", objective, "maxcut or cover");
  amp_cmd->add_flag("--include-zero", include_zero, "Include x = 0 in the support");
  auto* seq_opt = amp_cmd->add_option("--sequence", sequence, "Outcome string, first measurement first");
  auto* succ_opt = amp_cmd->add_option("--successes", successes, "Number of consecutive successes");
  seq_opt->excludes(succ_opt);
  amp_cmd->add_option("--tail-at", tail_at, "Report tail mass at this angle (e.g. pi, 3pi/4, 2.5)");
  amp_cmd->add_option("--samples", samples, "Draw this many assignments from the final state (n <= 20)");

  // figures
  auto* fig_cmd = app.add_subcommand("figures", "Regenerate figure data, CSV/JSON/SVG");
  std::string experiment = "all";
  std::vector<std::string> fig_graphs;
  int min_m = 0;
  std::optional<int> max_m;
  fig_cmd->add_option("--experiment", experiment, "fig1a|fig1b|fig1c|fig2|fig3|grid-table|custom|all");
  fig_cmd->add_option("--graph", fig_graphs, "Override the experiment's graphs (repeatable)");
  fig_cmd->add_option("--min-m", min_m, "First iteration to report");
  fig_cmd->add_option("--max-m", max_m, "Last iteration to report (or m for fig3/grid-table)");
  fig_cmd->add_option("--objective", objective, "maxcut or cover (custom experiment)");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Rigorous bounds on phase mass from sequence probabilities");
  std::optional<double> p_run;
  std::optional<double> p01;
  int bound_m = 1;
  std::string phi_r = "pi/2";
  std::optional<std::string> band_theta;
  bounds_cmd->add_option("--graph", graph_spec, "Compute p(1..1) and p(01) exactly from this graph");
  bounds_cmd->add_option("--uniform", uniform_n, "Compute them from a uniform histogram with N levels");
  bounds_cmd->add_option("--p-run", p_run, "Probability of m consecutive successes");
  bounds_cmd->add_option("--p01", p01, "Probability of the record 10 (one success, one failure)");
  bounds_cmd->add_option("--m", bound_m, "Number of successes in the run");
  bounds_cmd->add_option("--phi-r", phi_r, "Reference phase");
  bounds_cmd->add_option("--band-theta", band_theta, "Half-width for the pi/2 band bound");

  // twopeak
  auto* twopeak_cmd = app.add_subcommand("twopeak", "Two-peak landscape model");
  double q_upper = 0.125;
  double a_lower = 0.125;
  double a_upper = 2.0;
  int peak_m = 1;
  std::optional<double> target_ratio;
  twopeak_cmd->add_option("--q-upper", q_upper, "Fraction of assignments in the upper peak");
  twopeak_cmd->add_option("--a-lower", a_lower, "1 - cos(alpha_l)");
  twopeak_cmd->add_option("--a-upper", a_upper, "1 - cos(alpha_u)");
  twopeak_cmd->add_option("--M", peak_m, "Number of successes");
  twopeak_cmd->add_option("--target-ratio", target_ratio, "Report the M needed to reach this upper/lower ratio");

  // uniform-asymptotics
  auto* uni_cmd = app.add_subcommand("uniform-asymptotics", "Uniform-landscape run probabilities and tails");
  int uni_m = 100;
  std::optional<std::string> uni_theta;
  uni_cmd->add_option("--M", uni_m, "Number of successes");
  uni_cmd->add_option("--theta", uni_theta, "Threshold for the Gaussian tail estimate");
  uni_cmd->add_option("--N", uniform_n, "Also evaluate a finite uniform histogram with N levels");

  // verify-oracle
  auto* oracle_cmd = app.add_subcommand("verify-oracle", "Cross-check class weights against the state-vector simulator");
  int max_qubits = 5;
  int max_seq = 6;
  int trials = 50;
  oracle_cmd->add_option("--max-qubits", max_qubits, "Largest n_G (N = 2^n_G - 1)");
  oracle_cmd->add_option("--max-seq", max_seq, "Longest outcome string");
  oracle_cmd->add_option("--trials", trials, "Number of random phase sets");

  // grid-table
  auto* grid_cmd = app.add_subcommand("grid-table", "Optimal-solution numbers for the 4x4 grid");
  std::string table_graph = "grid:4x4";
  int table_m = 10;
  int table_samples = 4000;
  grid_cmd->add_option("--graph", table_graph, "Graph spec or file");
  grid_cmd->add_option("--m", table_m, "Number of successes");
  grid_cmd->add_option("--samples", table_samples, "Seeded draws from the amplified state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(pa::ExitCode::kInvalidArgument);
  }

  auto histogram_for = [&]() -> pa::PhaseHistogram {
    if (uniform_n) return pa::uniform_histogram(*uniform_n);
    if (graph_spec.empty()) throw pa::InvalidArgument("need --graph or --uniform");
    return pa::build_histogram(pa::graph_from_spec(graph_spec), pa::parse_objective(objective), include_zero);
  };

  try {
    const auto formats = ex::parse_formats(globals.formats);

    if (*graph_cmd) {
      const auto g = pa::graph_from_spec(graph_spec);
      if (with_optima) {
        const auto optima = pa::brute_force_optima(g, pa::parse_objective(objective));
        print({{"schema_version", pa::kSchemaVersion},
               {"graph", graph_spec},
               {"objective", objective},
               {"vertex_count", g.vertex_count()},
               {"edge_count", g.edge_count()},
               {"best_value", optima.best_value},
               {"maximizer_count", optima.maximizers.size()},
               {"maximizers", optima.maximizers}});
      } else {
        std::cout << pa::to_graph_text(g);
      }
    } else if (*hist_cmd) {
      const auto h = histogram_for();
      if (formats.count(ex::Format::kCsv) && !formats.count(ex::Format::kJson)) {
        std::cout << pa::to_csv(h);
      } else {
        print(pa::to_json(h));
      }
    } else if (*amp_cmd) {
      auto h = std::make_shared<const pa::PhaseHistogram>(histogram_for());
      const auto y = successes ? pa::MeasurementSequence::all_ones(*successes) : pa::MeasurementSequence::parse(sequence);
      const auto run = pa::run_sequence(h, y);
      std::optional<double> tail;
      if (!tail_at.empty()) tail = parse_angle(tail_at);
      auto report = pa::run_report_json(run.state, tail);
      report["success_probability_next"] = pa::success_probability(run.state);
      if (samples > 0) {
        if (graph_spec.empty()) throw pa::InvalidArgument("--samples needs --graph");
        const auto g = pa::graph_from_spec(graph_spec);
        const pa::ClassTable table(g, pa::parse_objective(objective), include_zero);
        std::mt19937_64 rng(globals.seed);
        json draws = json::array();
        for (int i = 0; i < samples; ++i) draws.push_back(pa::sample_assignment(run.state, table, rng));
        report["samples"] = draws;
        report["seed"] = globals.seed;
      }
      print(report);
    } else if (*fig_cmd) {
      std::vector<ex::ExperimentId> ids;
      if (experiment == "all") {
        ids = {ex::ExperimentId::kFig1a, ex::ExperimentId::kFig1b, ex::ExperimentId::kFig1c,
               ex::ExperimentId::kFig2,  ex::ExperimentId::kFig3,  ex::ExperimentId::kGridTable};
      } else {
        ids = {ex::parse_experiment(experiment)};
      }
      json written = json::array();
      for (auto id : ids) {
        ex::ExperimentConfig config;
        config.id = id;
        config.graphs = fig_graphs;
        config.min_m = min_m;
        config.max_m = max_m;
        config.out_dir = globals.out_dir;
        config.formats = formats;
        config.seed = globals.seed;
        config.objective = pa::parse_objective(objective);
        for (const auto& path : ex::run_experiment(config)) written.push_back(path.string());
      }
      print({{"schema_version", pa::kSchemaVersion}, {"written", written}});
    } else if (*bounds_cmd) {
      const double phi = parse_angle(phi_r);
      json out = {{"schema_version", pa::kSchemaVersion}, {"m", bound_m}, {"phi_r", phi}};
      std::optional<pa::PhaseHistogram> h;
      if (!graph_spec.empty() || uniform_n) {
        h = histogram_for();
        p_run = pa::sequence_probability(*h, bound_m, bound_m);
        p01 = pa::sequence_probability(*h, 1, 2);
      }
      if (!p_run) throw pa::InvalidArgument("need --p-run or a histogram source (--graph/--uniform)");
      out["p_run"] = *p_run;
      out["bounds"] = pa::analytics::to_json(pa::analytics::bound_from_success_run(*p_run, bound_m, phi));
      if (h) {
        out["exact_tail"] = pa::analytics::sampling_comparison(*h, phi, 0).p_sampled;
      }
      if (band_theta) {
        if (!p01) throw pa::InvalidArgument("band bound needs --p01 or a histogram source");
        const double theta = parse_angle(*band_theta);
        out["p01"] = *p01;
        out["band_theta"] = theta;
        out["band_lower_bound"] = pa::analytics::band_bound(*p01, theta);
      }
      print(out);
    } else if (*twopeak_cmd) {
      const auto model = pa::TwoPeakModel::from_coefficients(q_upper, a_lower, a_upper);
      auto out = pa::analytics::to_json(pa::analytics::two_peak_stats(model, peak_m));
      out["schema_version"] = pa::kSchemaVersion;
      out["M"] = peak_m;
      out["model"] = {{"q_upper", model.q_upper},
                      {"q_lower", model.q_lower()},
                      {"alpha_lower", model.alpha_lower},
                      {"alpha_upper", model.alpha_upper},
                      {"a_lower", model.a_lower},
                      {"a_upper", model.a_upper}};
      if (target_ratio) out["required_M"] = pa::analytics::two_peak_required_m(model, *target_ratio);
      print(out);
    } else if (*uni_cmd) {
      const auto run = pa::analytics::uniform_run_probability(uni_m);
      json out = {{"schema_version", pa::kSchemaVersion},
                  {"M", uni_m},
                  {"d_squared", pa::analytics::central_binomial_norm(uni_m).value},
                  {"step_success", pa::analytics::uniform_step_success(uni_m)},
                  {"run_probability", pa::analytics::to_json(run)}};
      if (uni_theta) {
        const double theta = parse_angle(*uni_theta);
        out["tail"] = {{"theta", theta}, {"gaussian_approx", pa::analytics::gaussian_tail_estimate(theta, uni_m)}};
        if (uniform_n) {
          const auto finite = pa::success_run(pa::uniform_histogram(*uniform_n), uni_m);
          out["tail"]["finite_N"] = pa::tail_probability(finite.state, theta);
        }
      }
      if (uniform_n) {
        const auto h = pa::uniform_histogram(*uniform_n);
        out["finite_N"] = {{"N", *uniform_n},
                           {"run_probability", pa::sequence_probability(h, uni_m, uni_m)},
                           {"p_1", pa::sequence_probability(h, 1, 1)},
                           {"p_11", pa::sequence_probability(h, 2, 2)},
                           {"p_01", pa::sequence_probability(h, 1, 2)}};
      }
      print(out);
    } else if (*oracle_cmd) {
      const auto report = pa::verify_oracle(max_qubits, max_seq, trials, globals.seed);
      print({{"schema_version", pa::kSchemaVersion},
             {"trials", report.trials},
             {"sequences", report.sequences},
             {"max_abs_deviation", std::max(report.max_probability_deviation, report.max_distribution_deviation)},
             {"max_probability_deviation", report.max_probability_deviation},
             {"max_distribution_deviation", report.max_distribution_deviation},
             {"max_closed_form_deviation", report.max_closed_form_deviation}});
    } else if (*grid_cmd) {
      auto out = ex::to_json(ex::grid_table(table_graph, table_m, table_samples, globals.seed));
      out["provenance"] = ex::provenance(table_graph, pa::ObjectiveKind::kMaxCut, globals.seed);
      print(out);
    }
  } catch (const pa::Error& e) {
    std::cerr << "phase-amp: " << e.what() << '\n';
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "phase-amp: " << e.what() << '\n';
    return static_cast<int>(pa::ExitCode::kInvalidArgument);
  }
  return 0;
}
