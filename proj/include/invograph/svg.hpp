#pragma once

#include <string>
#include <vector>

namespace invograph::svg {

enum class Style { points, line, steps };

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    Style style = Style::points;
};

struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

// Self-contained SVG document: axes with min/max ticks, one color per series,
// and a legend. Steps series treat x as interval edges (x.size() == y.size() + 1).
std::string render(const Plot& plot);

}  // namespace invograph::svg
