#include "invograph/stats.hpp"

#include <string>
#include <vector>

#include "invograph/error.hpp"

namespace invograph {

LineFit weighted_ols(std::span<const double> x, std::span<const double> y, std::span<const double> weights) {
    if (x.size() != y.size() || x.size() != weights.size()) {
        throw PreconditionError("regression inputs differ in length");
    }
    if (x.size() < 2) {
        throw DegenerateDataError("regression needs at least 2 points, got " + std::to_string(x.size()));
    }
    double sw = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (weights[i] < 0.0) throw PreconditionError("negative regression weight");
        sw += weights[i];
        sx += weights[i] * x[i];
        sy += weights[i] * y[i];
    }
    if (sw <= 0.0) throw DegenerateDataError("regression weights sum to zero");
    const double mx = sx / sw;
    const double my = sy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        sxx += weights[i] * dx * dx;
        sxy += weights[i] * dx * (y[i] - my);
    }
    if (sxx <= 0.0) throw DegenerateDataError("regression x values have no spread");
    const double slope = sxy / sxx;
    return LineFit{slope, my - slope * mx, x.size()};
}

LineFit ols(std::span<const double> x, std::span<const double> y) {
    const std::vector<double> ones(x.size(), 1.0);
    return weighted_ols(x, y, ones);
}

}  // namespace invograph
