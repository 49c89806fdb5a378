#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invograph/digraph.hpp"
#include "invograph/graphbuild.hpp"
#include "invograph/kernels.hpp"
#include "invograph/spectrum.hpp"
#include "invograph/stats.hpp"

namespace invograph {

// How an edge contributes to a count: once, or by its weight.
enum class EdgeMeasure { count, weight };

std::string_view to_string(EdgeMeasure measure);

// A graph whose nodes carry spectrum scores, with per-edge endpoint scores
// laid out as flat arrays for the kernels.
class EmbeddedGraph {
public:
    // Throws PreconditionError if any node is missing from the spectrum.
    EmbeddedGraph(Digraph graph, const Spectrum& spectrum);
    // Node scores given directly, indexed like graph.nodes().
    EmbeddedGraph(Digraph graph, std::vector<double> node_scores);

    const Digraph& graph() const { return graph_; }
    std::span<const double> node_scores() const { return node_scores_; }
    std::span<const double> src_scores() const { return src_scores_; }
    std::span<const double> dst_scores() const { return dst_scores_; }
    std::span<const double> weights(EdgeMeasure measure) const;

    // Sorted distinct node scores.
    std::vector<double> breakpoints() const;

private:
    void project();

    Digraph graph_;
    std::vector<double> node_scores_;
    std::vector<double> src_scores_;
    std::vector<double> dst_scores_;
    std::vector<double> weights_;
    std::vector<double> ones_;
};

struct OutlinkStats {
    std::string domain;
    double score = 0.0;
    double mu_out = 0.0;          // weighted mean landing score of x's out-links
    double mu_global_excl = 0.0;  // weighted mean landing score over G \ x
    double delta_out = 0.0;       // mu_out - mu_global_excl
    std::int64_t out_volume = 0;
};

// Throws DegenerateDataError when x has no out-links or G \ x has no edges,
// PreconditionError when x is not a node.
OutlinkStats outlink_stats(const EmbeddedGraph& g, std::string_view domain);

// Stats for every domain where they are defined, in node order.
std::vector<OutlinkStats> all_outlink_stats(const EmbeddedGraph& g);

enum class Regression { unweighted, volume_weighted };

struct SlopeResult {
    YearMonth month;
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t n_points = 0;
};

// a(G): least-squares slope of delta_out against score, one point per eligible
// domain (weighted by out-volume in volume_weighted mode).
SlopeResult delta_out_slope(const EmbeddedGraph& g, Regression regression = Regression::unweighted);
SlopeResult delta_out_slope(const InvocationGraph& g, const Spectrum& spectrum,
                            Regression regression = Regression::unweighted);

struct Histogram {
    std::vector<double> mass;

    std::size_t bins() const { return mass.size(); }
    double bin_lo(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(bins()); }
    double bin_hi(std::size_t i) const { return static_cast<double>(i + 1) / static_cast<double>(bins()); }
    double total() const;
};

// Edge lengths |s(src) - s(dst)| in equal-width bins over [0, 1]; the last bin
// is closed on the right. Throws PreconditionError when bins == 0.
Histogram edge_length_histogram(const EmbeddedGraph& g, std::size_t bins,
                                EdgeMeasure measure = EdgeMeasure::weight);

// f-> and f<- as step functions over the node scores. Interval j is the
// open interval (breakpoints[j], breakpoints[j+1]); because crossings use
// strict inequalities, the value exactly at a breakpoint is kept separately.
struct CrossingProfile {
    std::vector<double> breakpoints;
    std::vector<double> f_right;      // per interval
    std::vector<double> f_left;
    std::vector<double> point_right;  // at each breakpoint
    std::vector<double> point_left;
    EdgeMeasure mode = EdgeMeasure::count;

    std::size_t intervals() const { return f_right.size(); }
    // Exact integral of each function over [0, 1].
    double integral_right() const;
    double integral_left() const;
    // Value at any y; 0 outside [first, last] breakpoint.
    double right_at(double y) const;
    double left_at(double y) const;
};

CrossingProfile crossing_profile(const EmbeddedGraph& g, EdgeMeasure mode = EdgeMeasure::count);

// Direct evaluation at any y, including breakpoints.
kernels::CrossingSums crossing_at(const EmbeddedGraph& g, double y,
                                  EdgeMeasure mode = EdgeMeasure::count);

// Fills the value vectors of `profile` (breakpoints and mode already set) for
// an arbitrary edge set over the given node scores, by a sweep over
// difference arrays. Shared by observed and rewired graphs.
void sweep_crossings(std::span<const double> node_scores, std::span<const Edge> edges,
                     CrossingProfile& profile);

struct AsymmetryStats {
    std::string domain;
    double score = 0.0;
    double in_weight = 0.0;
    double out_weight = 0.0;
    double r = 0.0;  // in / (in + out)
};

struct AsymmetryResult {
    std::vector<AsymmetryStats> stats;
    std::optional<LineFit> fit;  // r against score; absent below two usable points
};

// Isolated nodes are skipped. `measure` picks weighted or plain degrees.
AsymmetryResult asymmetry(const EmbeddedGraph& g, EdgeMeasure measure = EdgeMeasure::weight);

}  // namespace invograph
