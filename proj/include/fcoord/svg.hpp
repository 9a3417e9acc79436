#pragma once

#include <string>
#include <vector>

namespace fcoord::svg {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 860;
    int height = 480;
};

// Minimal static line chart; one polyline per series, axes with tick labels
// and a legend.
void write_line_chart(const std::string& path, const ChartSpec& spec,
                      const std::vector<Series>& series);

// Scatter with an identity reference line, for regression plots.
void write_scatter_chart(const std::string& path, const ChartSpec& spec, const Series& points);

} // namespace fcoord::svg
