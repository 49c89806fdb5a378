#pragma once

#include <cstddef>
#include <span>

namespace invograph {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t n_points = 0;
};

// Least-squares line y = intercept + slope * x. Throws DegenerateDataError on
// fewer than two points or when x has no spread.
LineFit ols(std::span<const double> x, std::span<const double> y);
LineFit weighted_ols(std::span<const double> x, std::span<const double> y,
                     std::span<const double> weights);

}  // namespace invograph
