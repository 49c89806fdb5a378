#include "invograph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "invograph/csv.hpp"

namespace invograph::svg {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 50;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(std::string_view text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string num(double v) { return csv::format_double(std::round(v * 100.0) / 100.0); }

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void settle() {
        if (lo > hi) lo = 0, hi = 1;
        if (lo == hi) lo -= 0.5, hi += 0.5;
    }
};

}  // namespace

std::string render(const Plot& plot) {
    Range xr, yr;
    for (const auto& s : plot.series) {
        for (double v : s.x) xr.add(v);
        for (double v : s.y) yr.add(v);
    }
    xr.settle();
    yr.settle();
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return kTop + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << escape(plot.title) << "</text>\n";
    o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double base = kTop + ph;
    o << "<text x=\"" << kLeft << "\" y=\"" << base + 16 << "\">" << num(xr.lo) << "</text>\n";
    o << "<text x=\"" << kLeft + pw << "\" y=\"" << base + 16 << "\" text-anchor=\"end\">" << num(xr.hi)
      << "</text>\n";
    o << "<text x=\"" << kLeft - 6 << "\" y=\"" << base << "\" text-anchor=\"end\">" << num(yr.lo) << "</text>\n";
    o << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 10 << "\" text-anchor=\"end\">" << num(yr.hi)
      << "</text>\n";
    o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
      << escape(plot.x_label) << "</text>\n";
    o << "<text transform=\"translate(16," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(plot.y_label) << "</text>\n";
    if (yr.lo < 0 && yr.hi > 0) {
        o << "<line x1=\"" << kLeft << "\" x2=\"" << kLeft + pw << "\" y1=\"" << num(py(0)) << "\" y2=\""
          << num(py(0)) << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
    }

    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const auto& s = plot.series[k];
        const char* color = kColors[k % std::size(kColors)];
        if (s.style == Style::points) {
            for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
                if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
                o << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"2.5\" fill=\""
                  << color << "\"/>\n";
            }
        } else {
            std::ostringstream path;
            bool first = true;
            auto point = [&](double x, double y) {
                path << (first ? "M" : " L") << num(px(x)) << ' ' << num(py(y));
                first = false;
            };
            if (s.style == Style::line) {
                for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) point(s.x[i], s.y[i]);
            } else {
                for (std::size_t i = 0; i < s.y.size() && i + 1 < s.x.size(); ++i) {
                    point(s.x[i], s.y[i]);
                    point(s.x[i + 1], s.y[i]);
                }
            }
            o << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        }
        const double ly = kTop + 14 + 18 * static_cast<double>(k);
        o << "<rect x=\"" << kWidth - kRight + 12 << "\" y=\"" << ly - 9 << "\" width=\"10\" height=\"10\" fill=\""
          << color << "\"/>\n";
        o << "<text x=\"" << kWidth - kRight + 28 << "\" y=\"" << ly << "\">" << escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace invograph::svg
