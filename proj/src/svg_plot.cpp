#include "entbound/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace entbound {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 440;
constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 20;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Scale {
  double x0, x1, y0, y1;
  double px(double x) const {
    return kMarginLeft + (x - x0) / (x1 - x0) * (kWidth - kMarginLeft - kMarginRight);
  }
  double py(double y) const {
    return kHeight - kMarginBottom -
           (y - y0) / (y1 - y0) * (kHeight - kMarginTop - kMarginBottom);
  }
};

void axes(std::ostream& out, const Scale& s, const std::string& xlabel,
          const std::string& ylabel, bool integer_x) {
  out << "<rect width='" << kWidth << "' height='" << kHeight << "' fill='white'/>\n";
  out << "<line x1='" << s.px(s.x0) << "' y1='" << s.py(s.y0) << "' x2='" << s.px(s.x1)
      << "' y2='" << s.py(s.y0) << "' stroke='black'/>\n";
  out << "<line x1='" << s.px(s.x0) << "' y1='" << s.py(s.y0) << "' x2='" << s.px(s.x0)
      << "' y2='" << s.py(s.y1) << "' stroke='black'/>\n";
  const int xticks = integer_x ? std::min(10, static_cast<int>(s.x1 - s.x0)) : 5;
  for (int k = 0; k <= std::max(1, xticks); ++k) {
    const double x = s.x0 + (s.x1 - s.x0) * k / std::max(1, xticks);
    out << "<line x1='" << s.px(x) << "' y1='" << s.py(s.y0) << "' x2='" << s.px(x)
        << "' y2='" << s.py(s.y0) + 5 << "' stroke='black'/>\n";
    out << "<text x='" << s.px(x) << "' y='" << s.py(s.y0) + 20
        << "' font-size='12' text-anchor='middle'>"
        << (integer_x ? std::to_string(static_cast<int>(std::lround(x)))
                      : format_number(std::round(x * 100) / 100))
        << "</text>\n";
  }
  for (int k = 0; k <= 5; ++k) {
    const double y = s.y0 + (s.y1 - s.y0) * k / 5.0;
    out << "<line x1='" << s.px(s.x0) - 5 << "' y1='" << s.py(y) << "' x2='" << s.px(s.x0)
        << "' y2='" << s.py(y) << "' stroke='black'/>\n";
    out << "<text x='" << s.px(s.x0) - 8 << "' y='" << s.py(y) + 4
        << "' font-size='12' text-anchor='end'>" << format_number(std::round(y * 100) / 100)
        << "</text>\n";
  }
  out << "<text x='" << (kMarginLeft + kWidth - kMarginRight) / 2 << "' y='" << kHeight - 10
      << "' font-size='14' text-anchor='middle'>" << xlabel << "</text>\n";
  out << "<text x='15' y='" << kHeight / 2
      << "' font-size='14' text-anchor='middle' transform='rotate(-90 15 " << kHeight / 2
      << ")'>" << ylabel << "</text>\n";
}

}  // namespace

void render_sweep_svg(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='"
      << kHeight << "'>\n";
  if (rows.empty()) {
    out << "</svg>\n";
    return;
  }

  double l_min = 1e300, l_max = -1e300, y_max = 0.0;
  std::map<std::pair<double, std::string>, std::vector<const SweepRow*>> series;
  std::map<int, double> bound_by_l;
  for (const auto& r : rows) {
    if (!r.error.empty()) continue;
    l_min = std::min(l_min, double(r.L));
    l_max = std::max(l_max, double(r.L));
    y_max = std::max({y_max, r.bound_nats, r.mean_max_entropy_nats + r.std_dev});
    series[{r.beta, r.preset}].push_back(&r);
    bound_by_l[r.L] = r.bound_nats;
  }
  if (series.empty() || l_min >= l_max) {
    l_min -= 0.5;
    l_max += 0.5;
  }
  const Scale s{l_min - 0.25, l_max + 0.25, 0.0, y_max * 1.08 + 1e-9};
  axes(out, s, "L", "S_ent (nats)", true);

  // dashed theoretical bound
  out << "<polyline fill='none' stroke='black' stroke-dasharray='6 4' points='";
  for (const auto& [L, b] : bound_by_l) out << s.px(L) << ',' << s.py(b) << ' ';
  out << "'/>\n";

  int color = 0;
  int legend_y = kMarginTop + 10;
  for (const auto& [key, pts] : series) {
    const char* c = kPalette[color++ % 8];
    out << "<polyline fill='none' stroke='" << c << "' points='";
    for (const auto* r : pts) out << s.px(r->L) << ',' << s.py(r->mean_max_entropy_nats) << ' ';
    out << "'/>\n";
    for (const auto* r : pts) {
      const double x = s.px(r->L);
      out << "<circle cx='" << x << "' cy='" << s.py(r->mean_max_entropy_nats)
          << "' r='3' fill='" << c << "'/>\n";
      const double lo = s.py(r->mean_max_entropy_nats - r->std_dev);
      const double hi = s.py(r->mean_max_entropy_nats + r->std_dev);
      out << "<line x1='" << x << "' y1='" << lo << "' x2='" << x << "' y2='" << hi
          << "' stroke='" << c << "'/>\n";
      out << "<line x1='" << x - 3 << "' y1='" << lo << "' x2='" << x + 3 << "' y2='" << lo
          << "' stroke='" << c << "'/>\n";
      out << "<line x1='" << x - 3 << "' y1='" << hi << "' x2='" << x + 3 << "' y2='" << hi
          << "' stroke='" << c << "'/>\n";
    }
    out << "<text x='" << kWidth - kMarginRight - 5 << "' y='" << legend_y
        << "' font-size='12' text-anchor='end' fill='" << c << "'>beta="
        << format_number(key.first) << ", " << key.second << "</text>\n";
    legend_y += 16;
  }
  out << "</svg>\n";
}

void render_trace_svg(const std::vector<std::pair<double, double>>& trace, double bound,
                      std::ostream& out) {
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='"
      << kHeight << "'>\n";
  if (trace.empty()) {
    out << "</svg>\n";
    return;
  }
  double t_max = 0.0;
  for (const auto& [t, v] : trace) t_max = std::max(t_max, t);
  const Scale s{0.0, std::max(t_max, 1e-9), 0.0, std::max(bound, 1e-9) * 1.08};
  axes(out, s, "tau", "S_ent (nats)", false);
  out << "<line x1='" << s.px(s.x0) << "' y1='" << s.py(bound) << "' x2='" << s.px(s.x1)
      << "' y2='" << s.py(bound) << "' stroke='black' stroke-dasharray='6 4'/>\n";
  out << "<polyline fill='none' stroke='" << kPalette[0] << "' points='";
  for (const auto& [t, v] : trace) out << s.px(t) << ',' << s.py(v) << ' ';
  out << "'/>\n";
  out << "</svg>\n";
}

}  // namespace entbound
