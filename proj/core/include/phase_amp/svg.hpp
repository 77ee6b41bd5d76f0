#pragma once

#include <string>
#include <utility>
#include <vector>

namespace phase_amp {

enum class SeriesStyle { kLine, kBar };

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
  SeriesStyle style = SeriesStyle::kLine;
};

struct AxesMeta {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  int width = 640;
  int height = 400;
};

// Self-contained SVG chart. Line series get a polyline plus one circle marker
// per point; bar series get one rect per point. Two or more series add a
// legend. Output is byte-identical for identical input. Throws InvalidArgument
// when there are no series or a series has no points.
std::string emit_svg(const std::vector<Series>& series, const AxesMeta& axes);

}  // namespace phase_amp
