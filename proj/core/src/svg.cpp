#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>
#include <ostream>

#include "hgraph/experiments.hpp"

namespace hgraph {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kMargin = 60.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& out, const RunRecord& record) {
  // Uniqueness divergences span many decades, so they are drawn on a log axis.
  const bool log_y = record.kind != ScenarioKind::Verify;
  auto yval = [&](double y) { return log_y ? std::log10(std::max(y, 1e-300)) : y; };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : record.series) {
    for (Point2 p : s.points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || (log_y && !(p.y > 0.0))) continue;
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, yval(p.y));
      y1 = std::max(y1, yval(p.y));
    }
  }
  if (!(x1 > x0)) x0 -= 0.5, x1 += 0.5;
  if (!(y1 > y0)) y0 -= 0.5, y1 += 0.5;
  if (!std::isfinite(x0)) x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;

  auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto sy = [&](double y) { return kHeight - kMargin - (yval(y) - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kMargin << "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\">" << escape(record.scenario)
      << " (" << to_string(record.kind) << ")</text>\n";
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin << "\" height=\""
      << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"#888\"/>\n";
  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 20 << "\" font-family=\"sans-serif\" font-size=\"11\">x: "
      << fixed(x0) << " .. " << fixed(x1) << (log_y ? "   log10 y: " : "   y: ") << fixed(y0) << " .. " << fixed(y1)
      << "</text>\n";

  std::size_t color = 0;
  for (const auto& s : record.series) {
    const char* stroke = kPalette[color++ % std::size(kPalette)];
    std::string pts;
    for (Point2 p : s.points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || (log_y && !(p.y > 0.0))) continue;
      pts += fixed(sx(p.x)) + ',' + fixed(sy(p.y)) + ' ';
    }
    if (!pts.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
    }
    out << "<text x=\"" << kWidth - kMargin + 4 - 200 << "\" y=\"" << kMargin + 14 * color
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << stroke << "\">" << escape(s.name) << "</text>\n";
  }
  if (record.error) {
    out << "<text x=\"" << kMargin + 10 << "\" y=\"" << kHeight / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#d62728\">" << escape(*record.error) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace hgraph
