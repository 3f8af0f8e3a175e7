#include "svg.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace reinhardt::cli {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;

std::pair<double, double> padded_range(const std::vector<double>& v) {
  if (v.empty()) return {0.0, 1.0};
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  double a = *lo, b = *hi;
  const double span = b - a;
  const double pad = span > 1e-12 * std::max(1.0, std::abs(a)) ? 0.05 * span : std::max(1e-6, 1e-3 * std::abs(a));
  return {a - pad, b + pad};
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_scatter_svg(const std::vector<ScatterPanel>& panels) {
  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" width=\"{}\" height=\"{}\">\n", kWidth,
      kHeight, kWidth, kHeight);
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double panel_w = kWidth / std::max<std::size_t>(1, panels.size());
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const ScatterPanel& panel = panels[p];
    const double x0 = p * panel_w + kMargin;
    const double x1 = (p + 1) * panel_w - 20.0;
    const double y0 = kHeight - kMargin;
    const double y1 = 40.0;
    const auto [xa, xb] = padded_range(panel.x);
    const auto [ya, yb] = padded_range(panel.y);
    auto sx = [&](double v) { return x0 + (v - xa) / (xb - xa) * (x1 - x0); };
    auto sy = [&](double v) { return y0 - (v - ya) / (yb - ya) * (y0 - y1); };

    svg += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" stroke=\"black\"/>\n",
                       x0, y1, x1 - x0, y0 - y1);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"24\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
                       0.5 * (x0 + x1), escape(panel.title));
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
                       0.5 * (x0 + x1), kHeight - 20.0, escape(panel.x_label));
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 {:.2f} {:.2f})\">{}</text>\n",
        x0 - 40.0, 0.5 * (y0 + y1), x0 - 40.0, 0.5 * (y0 + y1), escape(panel.y_label));
    for (double v : {xa, xb})
      svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"10\" text-anchor=\"middle\">{:.6g}</text>\n",
                         sx(v), y0 + 14.0, v);
    for (double v : {ya, yb})
      svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"10\" text-anchor=\"end\">{:.6g}</text>\n",
                         x0 - 4.0, sy(v), v);
    const std::size_t count = std::min(panel.x.size(), panel.y.size());
    for (std::size_t i = 0; i < count; ++i)
      svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\" fill=\"steelblue\"/>\n", sx(panel.x[i]),
                         sy(panel.y[i]));
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace reinhardt::cli
