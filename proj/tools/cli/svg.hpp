#pragma once

#include <string>
#include <vector>

namespace reinhardt::cli {

struct ScatterPanel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Static 800×600 SVG with the panels laid out side by side. Output depends
/// only on the data.
std::string render_scatter_svg(const std::vector<ScatterPanel>& panels);

}  // namespace reinhardt::cli
