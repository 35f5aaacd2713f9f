#ifndef LEXIGAUGE_SVG_HPP
#define LEXIGAUGE_SVG_HPP

// Self-contained SVG line chart of two overlaid density curves.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "lexigauge/error.hpp"
#include "lexigauge/stats.hpp"
#include "lexigauge/xml.hpp"

namespace lexigauge::svg {

struct ChartLabels {
  std::string title;
  std::string x_axis;
  std::string first;
  std::string second;
};

inline std::string emit_density_svg(const stats::DensitySeries& a, const stats::DensitySeries& b,
                                    const ChartLabels& labels) {
  for (const auto* s : {&a, &b}) {
    if (s->grid.size() < 2 || s->grid.size() != s->density.size()) {
      throw DomainError("density series must have matching grids of at least two points");
    }
    auto finite = [](double v) { return std::isfinite(v); };
    if (!std::all_of(s->grid.begin(), s->grid.end(), finite) ||
        !std::all_of(s->density.begin(), s->density.end(), finite)) {
      throw DomainError("density series contains non-finite values");
    }
  }
  constexpr double width = 640, height = 400;
  constexpr double left = 64, right = 16, top = 40, bottom = 48;
  const double x_lo = std::min(a.grid.front(), b.grid.front());
  const double x_hi = std::max(a.grid.back(), b.grid.back());
  const double y_max = std::max(*std::max_element(a.density.begin(), a.density.end()),
                                *std::max_element(b.density.begin(), b.density.end()));
  const double y_hi = y_max > 0.0 ? y_max * 1.05 : 1.0;
  const double x_span = x_hi > x_lo ? x_hi - x_lo : 1.0;
  auto px = [&](double x) { return left + (x - x_lo) / x_span * (width - left - right); };
  auto py = [&](double y) { return height - bottom - y / y_hi * (height - top - bottom); };
  using xml::escape;

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"11\">\n"
      "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{3}</text>\n",
      width, height, width / 2, escape(labels.title));

  // axes
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", left,
                     height - bottom, width - right);
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", left, top,
                     height - bottom);
  constexpr int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double xv = x_lo + x_span * i / ticks;
    const double yv = y_hi * i / ticks;
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"black\"/>"
        "<text class=\"xtick\" x=\"{0:.2f}\" y=\"{3}\" text-anchor=\"middle\">{4:.4g}</text>\n",
        px(xv), height - bottom, height - bottom + 5, height - bottom + 18, xv);
    out += fmt::format(
        "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"black\"/>"
        "<text class=\"ytick\" x=\"{3}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:.3g}</text>\n",
        left - 5, py(yv), left, left - 8, py(yv) + 4, yv);
  }
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", left + (width - left - right) / 2,
                     height - 10, escape(labels.x_axis));
  out += fmt::format(
      "<text x=\"14\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 14 {0})\">density</text>\n",
      top + (height - top - bottom) / 2);

  constexpr std::array<std::string_view, 2> colors = {"#1b9e77", "#d95f02"};
  const std::array<const stats::DensitySeries*, 2> series = {&a, &b};
  const std::array<const std::string*, 2> names = {&labels.first, &labels.second};
  for (std::size_t k = 0; k < 2; ++k) {
    std::string d;
    for (std::size_t i = 0; i < series[k]->grid.size(); ++i) {
      d += fmt::format("{}{:.2f},{:.2f}", i == 0 ? "M" : " L", px(series[k]->grid[i]), py(series[k]->density[i]));
    }
    out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n", d, colors[k]);
    const double ly = top + 8 + 16.0 * static_cast<double>(k);
    out += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"3\"/>"
        "<text x=\"{4}\" y=\"{5}\">{6}</text>\n",
        width - right - 150, ly, width - right - 130, colors[k], width - right - 124, ly + 4, escape(*names[k]));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lexigauge::svg

#endif  // LEXIGAUGE_SVG_HPP
