#pragma once

#include <string>
#include <utility>
#include <vector>

namespace risq {

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

// Standalone SVG line plot with axes, ticks and a legend. Output is a pure
// function of the inputs (byte-identical across runs). Throws
// std::invalid_argument when no series has any point.
std::string render_line_plot(const std::string& title, const std::string& xlabel,
                             const std::string& ylabel,
                             const std::vector<Series>& series);

}  // namespace risq
