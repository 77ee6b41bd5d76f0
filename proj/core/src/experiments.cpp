#include "phase_amp/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "phase_amp/errors.hpp"

namespace phase_amp::experiments {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::filesystem::path>& written) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << content;
  written.push_back(path);
}

std::string slug(const std::string& spec) {
  std::string out;
  for (char c : spec) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

std::vector<Series> run_series(const std::vector<RunReport>& reports, int which) {
  std::vector<Series> out;
  for (const auto& r : reports) {
    Series s;
    s.name = r.graph + (which == 1 ? " individual" : which == 2 ? " sequence" : "");
    for (const auto& rec : r.records) {
      if (which == 0) s.points.emplace_back(rec.m, rec.p_optimal);
      if (which == 1 && rec.p_individual) s.points.emplace_back(rec.m, *rec.p_individual);
      if (which == 2) s.points.emplace_back(rec.m, rec.p_sequence);
    }
    if (!s.points.empty()) out.push_back(std::move(s));
  }
  return out;
}

RunReport clip(RunReport report, int min_m) {
  std::erase_if(report.records, [min_m](const IterationRecord& r) { return r.m < min_m; });
  return report;
}

}  // namespace

RunReport amplification_report(const std::string& graph_spec, ObjectiveKind kind, int max_m,
                               std::vector<double> tail_thetas) {
  if (max_m < 0) throw InvalidArgument("iteration range must be nonnegative");
  const Graph g = graph_from_spec(graph_spec);
  auto h = std::make_shared<const PhaseHistogram>(build_histogram(g, kind));
  RunReport report;
  report.graph = graph_spec;
  report.objective = kind;
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();
  const std::size_t top = h->top_occupied_level();
  report.optimal_k = h->level(top).k.value_or(static_cast<int>(top));
  report.optimal_count = h->level(top).count;
  report.tail_thetas = std::move(tail_thetas);

  ClassState state = initial_state(h);
  double sequence = 1.0;
  for (int m = 0; m <= max_m; ++m) {
    IterationRecord rec;
    rec.m = m;
    if (m > 0) {
      auto [next, p] = step(state, 1);
      state = std::move(next);
      rec.p_individual = p;
      sequence *= p;
    }
    rec.p_sequence = sequence;
    rec.p_optimal = state.weight(top);
    for (double theta : report.tail_thetas) rec.tails.push_back(tail_probability(state, theta));
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "m,p_individual,P_sequence,p_optimal_conditional\n";
  for (const auto& rec : report.records) {
    out << rec.m << ',' << (rec.p_individual ? num(*rec.p_individual) : std::string()) << ','
        << num(rec.p_sequence) << ',' << num(rec.p_optimal) << '\n';
  }
  return out.str();
}

nlohmann::json provenance(const std::string& graph, ObjectiveKind kind, std::uint64_t seed) {
  return {{"graph", graph},
          {"objective", std::string(to_string(kind))},
          {"tool", "phase-amp"},
          {"version", kToolVersion},
          {"seed", seed}};
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : report.records) {
    records.push_back({{"m", rec.m},
                       {"p_individual", rec.p_individual ? nlohmann::json(*rec.p_individual) : nlohmann::json(nullptr)},
                       {"P_sequence", rec.p_sequence},
                       {"p_optimal_conditional", rec.p_optimal},
                       {"tails", rec.tails}});
  }
  return {{"schema_version", kSchemaVersion},
          {"provenance", provenance(report.graph, report.objective, 0)},
          {"vertex_count", report.vertex_count},
          {"edge_count", report.edge_count},
          {"optimal_k", report.optimal_k},
          {"optimal_count", report.optimal_count},
          {"tail_thetas", report.tail_thetas},
          {"records", std::move(records)}};
}

std::vector<RunReport> fig1a(const std::vector<int>& line_sizes, int max_m) {
  std::vector<RunReport> out;
  for (int q : line_sizes) {
    if (q > 20) throw ResourceLimit("fig1a line graphs are limited to 20 vertices");
    out.push_back(amplification_report("line:" + std::to_string(q), ObjectiveKind::kMaxCut, max_m));
  }
  return out;
}

std::vector<RunReport> fig1b_fig1c(const std::vector<std::string>& graph_specs, int max_m) {
  std::vector<RunReport> out;
  for (const auto& spec : graph_specs) {
    out.push_back(amplification_report(spec, ObjectiveKind::kMaxCut, max_m, {kPi / 2, 3 * kPi / 4}));
  }
  return out;
}

std::vector<HistogramFigure> fig2(const std::vector<std::string>& graph_specs) {
  std::vector<HistogramFigure> out;
  for (const auto& spec : graph_specs) {
    out.push_back({spec, build_histogram(graph_from_spec(spec), ObjectiveKind::kMaxCut, true)});
  }
  return out;
}

AmplifiedHistogram fig3(const std::string& graph_spec, int m) {
  if (m < 0) throw InvalidArgument("fig3 needs m >= 0");
  const Graph g = graph_from_spec(graph_spec);
  auto h = std::make_shared<const PhaseHistogram>(build_histogram(g, ObjectiveKind::kMaxCut, true));
  const auto run = success_run(h, m);
  const double scale = static_cast<double>(g.assignment_count());
  AmplifiedHistogram out{graph_spec, m, *h, {}, h->mode_level(), 0};
  out.scaled.reserve(h->size());
  for (double w : run.state.weights()) out.scaled.push_back(scale * w);
  out.amplified_mode = static_cast<std::size_t>(
      std::max_element(out.scaled.begin(), out.scaled.end()) - out.scaled.begin());
  return out;
}

GridTable grid_table(const std::string& graph_spec, int m, int samples, std::uint64_t seed) {
  const Graph g = graph_from_spec(graph_spec);
  auto h = std::make_shared<const PhaseHistogram>(build_histogram(g, ObjectiveKind::kMaxCut));
  const std::size_t top = h->top_occupied_level();
  const auto run = success_run(h, m);
  GridTable t;
  t.graph = graph_spec;
  t.m = m;
  t.initial_optimal = static_cast<double>(h->level(top).count) / static_cast<double>(h->support());
  t.optimal_after = run.state.weight(top);
  t.run_probability = run.probability;
  t.checks_sampling = 1.0 / t.initial_optimal;
  t.checks_amplified = 1.0 / t.optimal_after;
  t.check_fraction = t.checks_amplified / t.checks_sampling;
  t.preparations_amplified = 1.0 / (t.run_probability * t.optimal_after);
  if (samples > 0 && g.vertex_count() <= ClassTable::kMaxVertices) {
    const ClassTable table(g, ObjectiveKind::kMaxCut);
    std::mt19937_64 rng(seed);
    t.samples = samples;
    for (int i = 0; i < samples; ++i) {
      if (table.class_of(sample_assignment(run.state, table, rng)) == top) ++t.optimal_hits;
    }
  }
  return t;
}

nlohmann::json to_json(const GridTable& t) {
  return {{"schema_version", kSchemaVersion},
          {"graph", t.graph},
          {"m", t.m},
          {"initial_optimal_probability", t.initial_optimal},
          {"optimal_probability_after_m", t.optimal_after},
          {"run_probability", t.run_probability},
          {"expected_checks_sampling", t.checks_sampling},
          {"expected_checks_amplified", t.checks_amplified},
          {"check_fraction", t.check_fraction},
          {"expected_preparations_amplified", t.preparations_amplified},
          {"samples", t.samples},
          {"optimal_hits", t.optimal_hits}};
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  if (text == "svg") return Format::kSvg;
  throw InvalidArgument("unknown format '" + text + "' (expected csv, json or svg)");
}

std::set<Format> parse_formats(const std::string& csv_list) {
  std::set<Format> out;
  std::stringstream in(csv_list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.insert(parse_format(item));
  }
  if (out.empty()) throw InvalidArgument("at least one output format is required");
  return out;
}

ExperimentId parse_experiment(const std::string& text) {
  if (text == "fig1a") return ExperimentId::kFig1a;
  if (text == "fig1b") return ExperimentId::kFig1b;
  if (text == "fig1c") return ExperimentId::kFig1c;
  if (text == "fig2") return ExperimentId::kFig2;
  if (text == "fig3") return ExperimentId::kFig3;
  if (text == "grid-table") return ExperimentId::kGridTable;
  if (text == "custom") return ExperimentId::kCustom;
  throw InvalidArgument("unknown experiment '" + text + "'");
}

std::string to_string(ExperimentId id) {
  switch (id) {
    case ExperimentId::kFig1a: return "fig1a";
    case ExperimentId::kFig1b: return "fig1b";
    case ExperimentId::kFig1c: return "fig1c";
    case ExperimentId::kFig2: return "fig2";
    case ExperimentId::kFig3: return "fig3";
    case ExperimentId::kGridTable: return "grid-table";
    case ExperimentId::kCustom: return "custom";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (min_m < 0 || (max_m && *max_m < min_m)) throw InvalidArgument("iteration range must satisfy 0 <= min <= max");
  if (formats.empty()) throw InvalidArgument("at least one output format is required");
  if (id == ExperimentId::kCustom && graphs.empty()) {
    throw InvalidArgument("custom experiment needs at least one --graph");
  }
}

std::vector<std::filesystem::path> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::filesystem::create_directories(config.out_dir);
  std::vector<std::filesystem::path> written;
  const std::string name = to_string(config.id);
  auto path = [&](const std::string& stem, const char* ext) { return config.out_dir / (stem + ext); };
  auto want = [&](Format f) { return config.formats.count(f) > 0; };

  auto emit_reports = [&](const std::vector<RunReport>& reports, const std::vector<int>& series_kinds,
                          const std::string& title, const std::string& y_label, bool log_y) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) {
      if (want(Format::kCsv)) write_file(path(name + "_" + slug(r.graph), ".csv"), to_csv(r), written);
      all.push_back(to_json(r));
    }
    if (want(Format::kJson)) {
      nlohmann::json doc = {{"schema_version", kSchemaVersion},
                            {"experiment", name},
                            {"provenance", provenance(reports.empty() ? "" : reports.front().graph, config.objective, config.seed)},
                            {"reports", all}};
      write_file(path(name, ".json"), doc.dump(2) + "\n", written);
    }
    if (want(Format::kSvg)) {
      std::vector<Series> series;
      for (int kind : series_kinds) {
        auto s = run_series(reports, kind);
        series.insert(series.end(), s.begin(), s.end());
      }
      write_file(path(name, ".svg"), emit_svg(series, {title, "successful measurements m", y_label, log_y}), written);
    }
  };

  auto graphs_or = [&](std::vector<std::string> defaults) {
    return config.graphs.empty() ? defaults : config.graphs;
  };

  switch (config.id) {
    case ExperimentId::kFig1a: {
      std::vector<int> sizes;
      for (const auto& spec : graphs_or({"line:6", "line:8", "line:10", "line:12"})) {
        const Graph g = graph_from_spec(spec);
        sizes.push_back(g.vertex_count());
      }
      std::vector<RunReport> reports;
      for (auto& r : fig1a(sizes, config.max_m.value_or(60))) reports.push_back(clip(std::move(r), config.min_m));
      emit_reports(reports, {0}, "Optimal-solution probability, line graphs", "P(optimal | m successes)", false);
      break;
    }
    case ExperimentId::kFig1b:
    case ExperimentId::kFig1c:
    case ExperimentId::kCustom: {
      const auto defaults = config.id == ExperimentId::kFig1b
                                ? std::vector<std::string>{"line:10", "grid:3x3", "grid:4x4"}
                                : std::vector<std::string>{"grid:4x4", "starring:16"};
      std::vector<RunReport> reports;
      for (const auto& spec : graphs_or(defaults)) {
        reports.push_back(clip(amplification_report(spec, config.objective, config.max_m.value_or(60), {kPi / 2, 3 * kPi / 4}),
                               config.min_m));
      }
      emit_reports(reports, {1, 2}, "Individual and sequence success probabilities", "probability", false);
      break;
    }
    case ExperimentId::kFig2: {
      const auto figs = fig2(graphs_or({"line:12", "grid:4x4", "starring:16"}));
      nlohmann::json all = nlohmann::json::array();
      std::vector<Series> series;
      for (const auto& f : figs) {
        if (want(Format::kCsv)) write_file(path(name + "_" + slug(f.graph), ".csv"), to_csv(f.histogram), written);
        auto j = to_json(f.histogram);
        j["graph"] = f.graph;
        j["mode_theta"] = f.histogram.level(f.histogram.mode_level()).theta;
        j["mean_theta"] = f.histogram.mean_phase();
        all.push_back(std::move(j));
        Series s{f.graph, {}, SeriesStyle::kBar};
        for (const auto& level : f.histogram.levels()) s.points.emplace_back(level.theta, static_cast<double>(level.count));
        if (want(Format::kSvg)) {
          write_file(path(name + "_" + slug(f.graph), ".svg"),
                     emit_svg({s}, {"Phase distribution " + f.graph, "theta (rad)", "g(theta)", false}), written);
        }
      }
      if (want(Format::kJson)) {
        nlohmann::json doc = {{"schema_version", kSchemaVersion},
                              {"experiment", name},
                              {"provenance", provenance("", config.objective, config.seed)},
                              {"histograms", all}};
        write_file(path(name, ".json"), doc.dump(2) + "\n", written);
      }
      break;
    }
    case ExperimentId::kFig3: {
      const auto spec = graphs_or({"grid:4x4"}).front();
      const int m = config.max_m.value_or(10);
      const auto fig = fig3(spec, m);
      if (want(Format::kCsv)) {
        std::ostringstream csv;
        csv << "theta,g_initial,g_amplified\n";
        for (std::size_t k = 0; k < fig.base.size(); ++k) {
          csv << num(fig.base.level(k).theta) << ',' << fig.base.level(k).count << ',' << num(fig.scaled[k]) << '\n';
        }
        write_file(path(name, ".csv"), csv.str(), written);
      }
      if (want(Format::kJson)) {
        nlohmann::json doc = {{"schema_version", kSchemaVersion},
                              {"experiment", name},
                              {"provenance", provenance(spec, ObjectiveKind::kMaxCut, config.seed)},
                              {"m", m},
                              {"base_mode_theta", fig.base_mode_theta()},
                              {"amplified_mode_theta", fig.amplified_mode_theta()},
                              {"scaled", fig.scaled}};
        write_file(path(name, ".json"), doc.dump(2) + "\n", written);
      }
      if (want(Format::kSvg)) {
        Series before{"initial", {}, SeriesStyle::kBar};
        Series after{"after " + std::to_string(m) + " successes", {}, SeriesStyle::kBar};
        for (std::size_t k = 0; k < fig.base.size(); ++k) {
          before.points.emplace_back(fig.base.level(k).theta, static_cast<double>(fig.base.level(k).count));
          after.points.emplace_back(fig.base.level(k).theta, fig.scaled[k]);
        }
        write_file(path(name, ".svg"),
                   emit_svg({before, after}, {"Amplified phase distribution " + spec, "theta (rad)", "2^n P(theta)", false}),
                   written);
      }
      break;
    }
    case ExperimentId::kGridTable: {
      const auto spec = graphs_or({"grid:4x4"}).front();
      const int m = config.max_m.value_or(10);
      const auto table = grid_table(spec, m, 4000, config.seed);
      auto j = to_json(table);
      j["provenance"] = provenance(spec, ObjectiveKind::kMaxCut, config.seed);
      if (want(Format::kJson)) write_file(path(name, ".json"), j.dump(2) + "\n", written);
      if (want(Format::kCsv)) {
        std::ostringstream csv;
        csv << "quantity,value\n";
        csv << "initial_optimal_probability," << num(table.initial_optimal) << '\n';
        csv << "optimal_probability_after_m," << num(table.optimal_after) << '\n';
        csv << "run_probability," << num(table.run_probability) << '\n';
        csv << "expected_checks_sampling," << num(table.checks_sampling) << '\n';
        csv << "expected_checks_amplified," << num(table.checks_amplified) << '\n';
        csv << "check_fraction," << num(table.check_fraction) << '\n';
        write_file(path(name, ".csv"), csv.str(), written);
      }
      if (want(Format::kSvg)) {
        const auto report = amplification_report(spec, ObjectiveKind::kMaxCut, m);
        write_file(path(name, ".svg"),
                   emit_svg(run_series({report}, 0), {"Optimal probability " + spec, "successful measurements m",
                                                      "P(optimal | m successes)", true}),
                   written);
      }
      break;
    }
  }
  return written;
}

}  // namespace phase_amp::experiments
