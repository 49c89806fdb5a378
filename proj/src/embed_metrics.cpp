#include "invograph/embed_metrics.hpp"

#include <algorithm>

#include "invograph/error.hpp"

namespace invograph {

std::string_view to_string(EdgeMeasure measure) {
    return measure == EdgeMeasure::count ? "count" : "weight";
}

EmbeddedGraph::EmbeddedGraph(Digraph graph, const Spectrum& spectrum) : graph_(std::move(graph)) {
    node_scores_.reserve(graph_.node_count());
    for (const auto& name : graph_.nodes()) {
        const auto* p = spectrum.find(name);
        if (!p) throw PreconditionError("node '" + name + "' has no spectrum score");
        node_scores_.push_back(p->score);
    }
    project();
}

EmbeddedGraph::EmbeddedGraph(Digraph graph, std::vector<double> node_scores)
    : graph_(std::move(graph)), node_scores_(std::move(node_scores)) {
    if (node_scores_.size() != graph_.node_count()) {
        throw PreconditionError("one score per node required");
    }
    project();
}

void EmbeddedGraph::project() {
    const auto edges = graph_.edges();
    src_scores_.resize(edges.size());
    dst_scores_.resize(edges.size());
    weights_.resize(edges.size());
    ones_.assign(edges.size(), 1.0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        src_scores_[i] = node_scores_[edges[i].src];
        dst_scores_[i] = node_scores_[edges[i].dst];
        weights_[i] = static_cast<double>(edges[i].weight);
    }
}

std::span<const double> EmbeddedGraph::weights(EdgeMeasure measure) const {
    return measure == EdgeMeasure::weight ? std::span<const double>(weights_) : std::span<const double>(ones_);
}

std::vector<double> EmbeddedGraph::breakpoints() const {
    std::vector<double> bp(node_scores_);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

namespace {

// Returns nullopt where the statistic is undefined, with the reason in `why`.
std::optional<OutlinkStats> try_outlink(const EmbeddedGraph& g, NodeId x, std::string* why) {
    const auto& graph = g.graph();
    const auto scores = g.node_scores();
    double out_w = 0.0, out_ws = 0.0, rest_w = 0.0, rest_ws = 0.0;
    for (const auto& e : graph.edges()) {
        const double w = static_cast<double>(e.weight);
        if (e.src == x) {
            out_w += w;
            out_ws += w * scores[e.dst];
        } else if (e.dst != x) {
            rest_w += w;
            rest_ws += w * scores[e.dst];
        }
    }
    if (out_w <= 0.0) {
        if (why) *why = "domain '" + graph.name(x) + "' has no out-links";
        return std::nullopt;
    }
    if (rest_w <= 0.0) {
        if (why) *why = "graph without '" + graph.name(x) + "' has no edges";
        return std::nullopt;
    }
    OutlinkStats s;
    s.domain = graph.name(x);
    s.score = scores[x];
    s.mu_out = out_ws / out_w;
    s.mu_global_excl = rest_ws / rest_w;
    s.delta_out = s.mu_out - s.mu_global_excl;
    s.out_volume = static_cast<std::int64_t>(out_w);
    return s;
}

}  // namespace

OutlinkStats outlink_stats(const EmbeddedGraph& g, std::string_view domain) {
    const auto x = g.graph().index_of(domain);
    if (!x) throw PreconditionError("domain '" + std::string(domain) + "' is not in the graph");
    std::string why;
    auto s = try_outlink(g, *x, &why);
    if (!s) throw DegenerateDataError("out-link stats undefined: " + why);
    return *s;
}

std::vector<OutlinkStats> all_outlink_stats(const EmbeddedGraph& g) {
    std::vector<OutlinkStats> out;
    for (NodeId x = 0; x < g.graph().node_count(); ++x) {
        if (auto s = try_outlink(g, x, nullptr)) out.push_back(std::move(*s));
    }
    return out;
}

SlopeResult delta_out_slope(const EmbeddedGraph& g, Regression regression) {
    const auto stats = all_outlink_stats(g);
    if (stats.size() < 2) {
        throw DegenerateDataError("slope needs at least 2 domains with out-link stats, got " +
                                  std::to_string(stats.size()));
    }
    std::vector<double> x, y, w;
    for (const auto& s : stats) {
        x.push_back(s.score);
        y.push_back(s.delta_out);
        w.push_back(regression == Regression::volume_weighted ? static_cast<double>(s.out_volume) : 1.0);
    }
    const auto fit = weighted_ols(x, y, w);
    return SlopeResult{YearMonth{}, fit.slope, fit.intercept, fit.n_points};
}

SlopeResult delta_out_slope(const InvocationGraph& g, const Spectrum& spectrum, Regression regression) {
    auto result = delta_out_slope(EmbeddedGraph(g.graph, spectrum), regression);
    result.month = g.month;
    return result;
}

double Histogram::total() const {
    double sum = 0.0;
    for (double m : mass) sum += m;
    return sum;
}

Histogram edge_length_histogram(const EmbeddedGraph& g, std::size_t bins, EdgeMeasure measure) {
    if (bins == 0) throw PreconditionError("histogram needs at least one bin");
    Histogram h;
    h.mass.assign(bins, 0.0);
    const auto src = g.src_scores();
    const auto dst = g.dst_scores();
    const auto w = g.weights(measure);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const double len = src[i] > dst[i] ? src[i] - dst[i] : dst[i] - src[i];
        auto bin = static_cast<std::size_t>(len * static_cast<double>(bins));
        h.mass[std::min(bin, bins - 1)] += w[i];
    }
    return h;
}

void sweep_crossings(std::span<const double> node_scores, std::span<const Edge> edges,
                     CrossingProfile& profile) {
    const auto& bp = profile.breakpoints;
    const std::size_t nb = bp.size();
    const std::size_t k = nb < 2 ? 0 : nb - 1;
    // Interval j = (bp[j], bp[j+1]) is crossed by an edge spanning [lo, hi]
    // when lo <= bp[j] and bp[j+1] <= hi; breakpoint j when lo < bp[j] < hi.
    std::vector<double> d_right(k + 1, 0.0), d_left(k + 1, 0.0);
    std::vector<double> p_right(nb + 1, 0.0), p_left(nb + 1, 0.0);
    for (const auto& e : edges) {
        const double s = node_scores[e.src];
        const double t = node_scores[e.dst];
        if (s == t) continue;
        const double lo = std::min(s, t), hi = std::max(s, t);
        const double w = profile.mode == EdgeMeasure::weight ? static_cast<double>(e.weight) : 1.0;
        const auto first_ge = static_cast<std::size_t>(std::lower_bound(bp.begin(), bp.end(), lo) - bp.begin());
        const auto first_gt_lo = static_cast<std::size_t>(std::upper_bound(bp.begin(), bp.end(), lo) - bp.begin());
        const auto first_ge_hi = static_cast<std::size_t>(std::lower_bound(bp.begin(), bp.end(), hi) - bp.begin());
        const auto first_gt_hi = static_cast<std::size_t>(std::upper_bound(bp.begin(), bp.end(), hi) - bp.begin());
        auto& d = s < t ? d_right : d_left;
        auto& p = s < t ? p_right : p_left;
        if (first_gt_hi >= first_ge + 2) {  // intervals first_ge .. first_gt_hi - 2
            d[first_ge] += w;
            d[first_gt_hi - 1] -= w;
        }
        if (first_ge_hi > first_gt_lo) {  // breakpoints first_gt_lo .. first_ge_hi - 1
            p[first_gt_lo] += w;
            p[first_ge_hi] -= w;
        }
    }
    profile.f_right.assign(k, 0.0);
    profile.f_left.assign(k, 0.0);
    double run_r = 0.0, run_l = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        run_r += d_right[j];
        run_l += d_left[j];
        profile.f_right[j] = run_r;
        profile.f_left[j] = run_l;
    }
    profile.point_right.assign(nb, 0.0);
    profile.point_left.assign(nb, 0.0);
    run_r = run_l = 0.0;
    for (std::size_t j = 0; j < nb; ++j) {
        run_r += p_right[j];
        run_l += p_left[j];
        profile.point_right[j] = run_r;
        profile.point_left[j] = run_l;
    }
}

CrossingProfile crossing_profile(const EmbeddedGraph& g, EdgeMeasure mode) {
    CrossingProfile p;
    p.mode = mode;
    p.breakpoints = g.breakpoints();
    sweep_crossings(g.node_scores(), g.graph().edges(), p);
    return p;
}

namespace {

double step_integral(const std::vector<double>& bp, const std::vector<double>& f) {
    double sum = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) sum += f[j] * (bp[j + 1] - bp[j]);
    return sum;
}

double step_value(const std::vector<double>& bp, const std::vector<double>& intervals,
                  const std::vector<double>& points, double y) {
    if (bp.empty() || y < bp.front() || y > bp.back()) return 0.0;
    const auto it = std::lower_bound(bp.begin(), bp.end(), y);
    const auto j = static_cast<std::size_t>(it - bp.begin());
    if (*it == y) return points[j];
    return intervals[j - 1];
}

}  // namespace

double CrossingProfile::integral_right() const { return step_integral(breakpoints, f_right); }
double CrossingProfile::integral_left() const { return step_integral(breakpoints, f_left); }
double CrossingProfile::right_at(double y) const { return step_value(breakpoints, f_right, point_right, y); }
double CrossingProfile::left_at(double y) const { return step_value(breakpoints, f_left, point_left, y); }

kernels::CrossingSums crossing_at(const EmbeddedGraph& g, double y, EdgeMeasure mode) {
    return kernels::crossing_sums(g.src_scores(), g.dst_scores(), g.weights(mode), y);
}

AsymmetryResult asymmetry(const EmbeddedGraph& g, EdgeMeasure measure) {
    const auto& graph = g.graph();
    std::vector<double> in(graph.node_count(), 0.0), out(graph.node_count(), 0.0);
    for (const auto& e : graph.edges()) {
        const double w = measure == EdgeMeasure::weight ? static_cast<double>(e.weight) : 1.0;
        out[e.src] += w;
        in[e.dst] += w;
    }
    AsymmetryResult result;
    std::vector<double> x, y;
    for (NodeId i = 0; i < graph.node_count(); ++i) {
        if (in[i] + out[i] <= 0.0) continue;
        AsymmetryStats s{graph.name(i), g.node_scores()[i], in[i], out[i], in[i] / (in[i] + out[i])};
        x.push_back(s.score);
        y.push_back(s.r);
        result.stats.push_back(std::move(s));
    }
    try {
        result.fit = ols(x, y);
    } catch (const DegenerateDataError&) {
        result.fit.reset();
    }
    return result;
}

}  // namespace invograph
