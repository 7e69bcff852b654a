#pragma once

#include <string>
#include <vector>

namespace rcft::cli {

struct Series {
  std::string name;
  std::vector<double> values;
};

/// Grouped vertical bars: one group per category, one bar per series.
std::string bar_chart(const std::string& title, const std::string& y_label,
                      const std::vector<std::string>& categories, const std::vector<Series>& series);

/// One polyline per series over x = 1..n.
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series);

}  // namespace rcft::cli
