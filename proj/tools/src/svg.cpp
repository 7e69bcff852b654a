#include "rcft/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace rcft::cli {
namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 72, kRight = 24, kTop = 48, kBottom = 64;
constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#b07aa1"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

const char* color(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

// Round up to 1, 2 or 5 times a power of ten.
double nice_ceil(double v) {
  if (!(v > 0.0)) return 1.0;
  const double mag = std::pow(10.0, std::floor(std::log10(v)));
  for (double f : {1.0, 2.0, 5.0, 10.0})
    if (f * mag >= v * (1.0 - 1e-12)) return f * mag;
  return 10.0 * mag;
}

std::string text(double x, double y, const std::string& s, const char* anchor = "middle",
                 const char* extra = "") {
  return "<text x=\"" + px(x) + "\" y=\"" + px(y) + "\" text-anchor=\"" + anchor + "\"" + extra +
         ">" + escape(s) + "</text>\n";
}

struct Frame {
  double y_max;
  double plot_w = kWidth - kLeft - kRight;
  double plot_h = kHeight - kTop - kBottom;

  double y(double v) const { return kTop + plot_h * (1.0 - v / y_max); }
};

std::string open(const std::string& title, const std::string& y_label, const Frame& f) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) + "\" height=\"" +
                  px(kHeight) + "\" viewBox=\"0 0 " + px(kWidth) + " " + px(kHeight) +
                  "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += text(kWidth / 2, 24, title, "middle", " font-size=\"15\"");
  s += text(18, kTop + f.plot_h / 2, y_label, "middle",
            (" transform=\"rotate(-90 18 " + px(kTop + f.plot_h / 2) + ")\"").c_str());
  for (int i = 0; i <= 5; ++i) {
    const double v = f.y_max * i / 5.0;
    const double yy = f.y(v);
    s += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(yy) + "\" x2=\"" + px(kLeft + f.plot_w) + "\" y2=\"" +
         px(yy) + "\" stroke=\"#dddddd\"/>\n";
    s += text(kLeft - 6, yy + 4, fmt("%g", v), "end");
  }
  s += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kTop) + "\" x2=\"" + px(kLeft) + "\" y2=\"" +
       px(kTop + f.plot_h) + "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kTop + f.plot_h) + "\" x2=\"" + px(kLeft + f.plot_w) +
       "\" y2=\"" + px(kTop + f.plot_h) + "\" stroke=\"black\"/>\n";
  return s;
}

std::string legend(const std::vector<Series>& series) {
  std::string s;
  double x = kLeft + 8;
  for (std::size_t i = 0; i < series.size(); ++i) {
    s += "<rect x=\"" + px(x) + "\" y=\"" + px(kTop - 16) + "\" width=\"10\" height=\"10\" fill=\"" +
         color(i) + "\"/>\n";
    s += text(x + 14, kTop - 7, series[i].name, "start");
    x += 24 + 7.5 * static_cast<double>(series[i].name.size());
  }
  return s;
}

double max_value(const std::vector<Series>& series) {
  double m = 0.0;
  for (const auto& s : series)
    for (double v : s.values)
      if (std::isfinite(v)) m = std::max(m, v);
  return m;
}

}  // namespace

std::string bar_chart(const std::string& title, const std::string& y_label,
                      const std::vector<std::string>& categories, const std::vector<Series>& series) {
  Frame f{nice_ceil(max_value(series) * 1.05)};
  std::string s = open(title, y_label, f);
  const double group_w = f.plot_w / static_cast<double>(std::max<std::size_t>(categories.size(), 1));
  const double bar_w = group_w * 0.8 / static_cast<double>(std::max<std::size_t>(series.size(), 1));
  for (std::size_t c = 0; c < categories.size(); ++c) {
    const double gx = kLeft + group_w * static_cast<double>(c) + group_w * 0.1;
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (c >= series[i].values.size() || !std::isfinite(series[i].values[c])) continue;
      const double v = series[i].values[c];
      const double top = f.y(v);
      s += "<rect x=\"" + px(gx + bar_w * static_cast<double>(i)) + "\" y=\"" + px(top) + "\" width=\"" +
           px(bar_w) + "\" height=\"" + px(kTop + f.plot_h - top) + "\" fill=\"" + color(i) + "\"><title>" +
           escape(series[i].name + " " + categories[c] + ": " + fmt("%.4g", v)) + "</title></rect>\n";
    }
    s += text(gx + group_w * 0.4, kTop + f.plot_h + 18, categories[c]);
  }
  if (series.size() > 1) s += legend(series);
  return s + "</svg>\n";
}

std::string line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series) {
  Frame f{nice_ceil(max_value(series) * 1.05)};
  std::string s = open(title, y_label, f);
  std::size_t n = 0;
  for (const auto& sr : series) n = std::max(n, sr.values.size());
  const double x_max = static_cast<double>(std::max<std::size_t>(n, 2));
  auto x_of = [&](double round) { return kLeft + f.plot_w * (round - 1.0) / (x_max - 1.0); };

  const double step = nice_ceil(x_max / 8.0);
  for (double r = step; r <= x_max + 1e-9; r += step) {
    s += "<line x1=\"" + px(x_of(r)) + "\" y1=\"" + px(kTop + f.plot_h) + "\" x2=\"" + px(x_of(r)) +
         "\" y2=\"" + px(kTop + f.plot_h + 4) + "\" stroke=\"black\"/>\n";
    s += text(x_of(r), kTop + f.plot_h + 18, fmt("%g", r));
  }
  s += text(kLeft + f.plot_w / 2, kHeight - 18, x_label);

  for (std::size_t i = 0; i < series.size(); ++i) {
    std::string points;
    for (std::size_t k = 0; k < series[i].values.size(); ++k) {
      if (!std::isfinite(series[i].values[k])) continue;
      if (!points.empty()) points += ' ';
      points += px(x_of(static_cast<double>(k + 1))) + "," + px(f.y(series[i].values[k]));
    }
    s += "<polyline fill=\"none\" stroke=\"" + std::string(color(i)) + "\" stroke-width=\"2\" points=\"" +
         points + "\"/>\n";
  }
  s += legend(series);
  return s + "</svg>\n";
}

}  // namespace rcft::cli
