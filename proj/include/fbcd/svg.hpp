#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fbcd {

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<double> x, y;
};

// Minimal hand-emitted SVG line plot (axes, ticks, legend, polylines).
void write_svg_lines(std::ostream& os, const std::vector<SvgSeries>& series,
                     const std::string& title, const std::string& xlabel,
                     const std::string& ylabel);

// Categorical heat map for sweeps: one colored cell per (i, j) with a label index.
void write_svg_heatmap(std::ostream& os, const std::vector<std::vector<int>>& cells,
                       const std::vector<std::string>& cell_names,
                       const std::vector<double>& xs, const std::vector<double>& ys,
                       const std::string& title, const std::string& xlabel,
                       const std::string& ylabel);

} // namespace fbcd
