#include "phase_amp/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "phase_amp/errors.hpp"

namespace phase_amp {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 50.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi - lo <= 0.0) {
      const double d = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
      lo -= d;
      hi += d;
    }
  }
};

}  // namespace

std::string emit_svg(const std::vector<Series>& series, const AxesMeta& axes) {
  if (series.empty()) throw InvalidArgument("emit_svg needs at least one series");
  Range xr;
  Range yr;
  bool any_bar = false;
  for (const auto& s : series) {
    if (s.points.empty()) throw InvalidArgument("series '" + s.name + "' has no points");
    any_bar = any_bar || s.style == SeriesStyle::kBar;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) throw InvalidArgument("series '" + s.name + "' has a non-finite point");
      if (axes.log_y && y <= 0.0) continue;
      xr.add(x);
      yr.add(axes.log_y ? std::log10(y) : y);
    }
  }
  if (!std::isfinite(yr.lo)) throw InvalidArgument("log-scale chart has no positive values");
  if (any_bar && !axes.log_y) yr.add(0.0);
  xr.pad();
  yr.pad();

  const double plot_w = axes.width - kMarginLeft - kMarginRight;
  const double plot_h = axes.height - kMarginTop - kMarginBottom;
  auto sx = [&](double x) { return kMarginLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double y) {
    const double v = axes.log_y ? std::log10(y) : y;
    return kMarginTop + (1.0 - (v - yr.lo) / (yr.hi - yr.lo)) * plot_h;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << axes.width << "\" height=\""
      << axes.height << "\" viewBox=\"0 0 " << axes.width << ' ' << axes.height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(axes.width / 2.0) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(axes.title) << "</text>\n";

  // Axes box and ticks.
  out << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop) << "\" width=\"" << fmt(plot_w)
      << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double px = kMarginLeft + plot_w * i / kTicks;
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(kMarginTop + plot_h) << "\" x2=\"" << fmt(px)
        << "\" y2=\"" << fmt(kMarginTop + plot_h + 4) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(kMarginTop + plot_h + 16)
        << "\" text-anchor=\"middle\">" << tick_label(fx) << "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    const double py = kMarginTop + plot_h * (1.0 - static_cast<double>(i) / kTicks);
    out << "<line x1=\"" << fmt(kMarginLeft - 4) << "\" y1=\"" << fmt(py) << "\" x2=\"" << fmt(kMarginLeft)
        << "\" y2=\"" << fmt(py) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(kMarginLeft - 6) << "\" y=\"" << fmt(py + 4) << "\" text-anchor=\"end\">"
        << tick_label(axes.log_y ? std::pow(10.0, fy) : fy) << "</text>\n";
  }
  out << "<text x=\"" << fmt(kMarginLeft + plot_w / 2) << "\" y=\"" << fmt(axes.height - 10.0)
      << "\" text-anchor=\"middle\">" << escape(axes.x_label) << "</text>\n";
  out << "<text x=\"14\" y=\"" << fmt(kMarginTop + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << fmt(kMarginTop + plot_h / 2) << ")\">" << escape(axes.y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % kPalette.size()];
    out << "<g class=\"series\" data-name=\"" << escape(s.name) << "\">\n";
    if (s.style == SeriesStyle::kBar) {
      double step = xr.hi - xr.lo;
      for (std::size_t j = 1; j < s.points.size(); ++j) {
        step = std::min(step, std::abs(s.points[j].first - s.points[j - 1].first));
      }
      const double bar_w = std::max(1.0, 0.8 * step / (xr.hi - xr.lo) * plot_w / static_cast<double>(series.size()));
      const double base = sy(axes.log_y ? std::pow(10.0, yr.lo) : 0.0);
      for (const auto& [x, y] : s.points) {
        if (axes.log_y && y <= 0.0) continue;
        const double top = sy(y);
        const double left = sx(x) - bar_w * static_cast<double>(series.size()) / 2.0 + bar_w * static_cast<double>(i);
        out << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(std::min(top, base)) << "\" width=\"" << fmt(bar_w)
            << "\" height=\"" << fmt(std::abs(base - top)) << "\" fill=\"" << color << "\"/>\n";
      }
    } else {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      bool first = true;
      for (const auto& [x, y] : s.points) {
        if (axes.log_y && y <= 0.0) continue;
        out << (first ? "" : " ") << fmt(sx(x)) << ',' << fmt(sy(y));
        first = false;
      }
      out << "\"/>\n";
      for (const auto& [x, y] : s.points) {
        if (axes.log_y && y <= 0.0) continue;
        out << "<circle class=\"marker\" cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y)) << "\" r=\"2.5\" fill=\""
            << color << "\"/>\n";
      }
    }
    out << "</g>\n";
  }

  if (series.size() >= 2) {
    out << "<g class=\"legend\">\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
      const double y = kMarginTop + 12.0 + 16.0 * static_cast<double>(i);
      const double x = kMarginLeft + plot_w - 150.0;
      out << "<rect class=\"legend-entry\" x=\"" << fmt(x) << "\" y=\"" << fmt(y - 8) << "\" width=\"10\" height=\"10\" fill=\""
          << kPalette[i % kPalette.size()] << "\"/>\n";
      out << "<text x=\"" << fmt(x + 14) << "\" y=\"" << fmt(y + 1) << "\">" << escape(series[i].name) << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace phase_amp
