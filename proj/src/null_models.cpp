#include "invograph/null_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "invograph/align.hpp"
#include "invograph/error.hpp"
#include "invograph/kernels.hpp"
#include "invograph/rng.hpp"

namespace invograph {

RewiredGraph rewire(const Digraph& graph, std::uint64_t rng_seed) {
    const auto total = graph.total_weight();
    if (total > static_cast<std::int64_t>(std::numeric_limits<std::uint32_t>::max())) {
        throw PreconditionError("graph weight too large to expand into stubs");
    }
    const auto stubs = static_cast<std::size_t>(total);

    // Out-stubs grouped by source in node order (edges are sorted by src).
    std::vector<NodeId> out_stubs;
    out_stubs.reserve(stubs);
    for (const auto& e : graph.edges()) out_stubs.insert(out_stubs.end(), static_cast<std::size_t>(e.weight), e.src);

    std::vector<NodeId> in_stubs;
    in_stubs.reserve(stubs);
    const auto in_w = graph.in_weights();
    for (NodeId v = 0; v < in_w.size(); ++v) in_stubs.insert(in_stubs.end(), static_cast<std::size_t>(in_w[v]), v);

    Rng rng(rng_seed);
    rng.shuffle(std::span<NodeId>(in_stubs));

    // Out-stubs of one source are contiguous; count targets per block.
    std::vector<Edge> edges;
    std::size_t i = 0;
    while (i < stubs) {
        std::size_t j = i;
        while (j < stubs && out_stubs[j] == out_stubs[i]) ++j;
        std::sort(in_stubs.begin() + static_cast<std::ptrdiff_t>(i), in_stubs.begin() + static_cast<std::ptrdiff_t>(j));
        for (std::size_t k = i; k < j;) {
            std::size_t m = k;
            while (m < j && in_stubs[m] == in_stubs[k]) ++m;
            edges.push_back({out_stubs[i], in_stubs[k], static_cast<std::int64_t>(m - k)});
            k = m;
        }
        i = j;
    }
    std::vector<std::string> nodes(graph.nodes().begin(), graph.nodes().end());
    return RewiredGraph{Digraph::from_indexed(std::move(nodes), std::move(edges)), rng_seed};
}

NullCrossingProfile expected_crossing_analytic(const EmbeddedGraph& g) {
    const auto& graph = g.graph();
    const double total = static_cast<double>(graph.total_weight());
    if (total <= 0.0) throw DegenerateDataError("expected crossing needs a graph with positive total weight");

    NullCrossingProfile out;
    auto& p = out.mean;
    p.mode = EdgeMeasure::weight;
    p.breakpoints = g.breakpoints();
    const auto& bp = p.breakpoints;
    const std::size_t nb = bp.size();

    // Degree mass sitting exactly at each breakpoint.
    std::vector<double> out_at(nb, 0.0), in_at(nb, 0.0);
    const auto out_w = graph.out_weights();
    const auto in_w = graph.in_weights();
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        const auto j = static_cast<std::size_t>(
            std::lower_bound(bp.begin(), bp.end(), g.node_scores()[v]) - bp.begin());
        out_at[j] += static_cast<double>(out_w[v]);
        in_at[j] += static_cast<double>(in_w[v]);
    }
    // below[j] = mass at breakpoints < j, above[j] = mass at breakpoints > j.
    std::vector<double> out_below(nb + 1, 0.0), in_below(nb + 1, 0.0);
    for (std::size_t j = 0; j < nb; ++j) {
        out_below[j + 1] = out_below[j] + out_at[j];
        in_below[j + 1] = in_below[j] + in_at[j];
    }
    const double out_all = out_below[nb], in_all = in_below[nb];

    p.point_right.resize(nb);
    p.point_left.resize(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        const double out_left = out_below[j], in_left = in_below[j];
        const double out_right = out_all - out_below[j + 1], in_right = in_all - in_below[j + 1];
        p.point_right[j] = out_left * in_right / total;
        p.point_left[j] = out_right * in_left / total;
    }
    const std::size_t k = nb < 2 ? 0 : nb - 1;
    p.f_right.resize(k);
    p.f_left.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        // y inside (bp[j], bp[j+1]): left side holds breakpoints 0..j.
        const double out_left = out_below[j + 1], in_left = in_below[j + 1];
        const double out_right = out_all - out_left, in_right = in_all - in_left;
        p.f_right[j] = out_left * in_right / total;
        p.f_left[j] = out_right * in_left / total;
    }
    out.se_right.assign(k, 0.0);
    out.se_left.assign(k, 0.0);
    out.se_point_right.assign(nb, 0.0);
    out.se_point_left.assign(nb, 0.0);
    return out;
}

namespace {

// Running mean and squared deviation (Welford), one slot per value.
struct Accumulator {
    std::vector<double> mean, m2;

    explicit Accumulator(std::size_t n) : mean(n, 0.0), m2(n, 0.0) {}

    void add(const std::vector<double>& x, std::size_t count) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double delta = x[i] - mean[i];
            mean[i] += delta / static_cast<double>(count);
            m2[i] += delta * (x[i] - mean[i]);
        }
    }

    std::vector<double> standard_error(std::size_t count) const {
        std::vector<double> se(mean.size(), 0.0);
        if (count < 2) return se;
        for (std::size_t i = 0; i < se.size(); ++i) {
            se[i] = std::sqrt(m2[i] / static_cast<double>(count - 1) / static_cast<double>(count));
        }
        return se;
    }
};

}  // namespace

NullCrossingProfile expected_crossing_monte_carlo(const EmbeddedGraph& g, EdgeMeasure mode,
                                                  std::size_t trials, std::uint64_t rng_seed) {
    if (trials == 0) throw PreconditionError("Monte Carlo null needs at least one trial");
    if (g.graph().total_weight() <= 0) {
        throw DegenerateDataError("expected crossing needs a graph with positive total weight");
    }
    CrossingProfile trial;
    trial.mode = mode;
    trial.breakpoints = g.breakpoints();
    const std::size_t nb = trial.breakpoints.size();
    const std::size_t k = nb < 2 ? 0 : nb - 1;
    Accumulator right(k), left(k), pright(nb), pleft(nb);

    // Trials are reduced in index order, so the result only depends on the seed.
    for (std::size_t t = 0; t < trials; ++t) {
        const auto rewired = rewire(g.graph(), derive_seed(rng_seed, t));
        sweep_crossings(g.node_scores(), rewired.graph.edges(), trial);
        right.add(trial.f_right, t + 1);
        left.add(trial.f_left, t + 1);
        pright.add(trial.point_right, t + 1);
        pleft.add(trial.point_left, t + 1);
    }
    NullCrossingProfile out;
    out.mean.mode = mode;
    out.mean.breakpoints = trial.breakpoints;
    out.mean.f_right = right.mean;
    out.mean.f_left = left.mean;
    out.mean.point_right = pright.mean;
    out.mean.point_left = pleft.mean;
    out.se_right = right.standard_error(trials);
    out.se_left = left.standard_error(trials);
    out.se_point_right = pright.standard_error(trials);
    out.se_point_left = pleft.standard_error(trials);
    out.trials = trials;
    return out;
}

NullCrossingProfile expected_crossing(const EmbeddedGraph& g, EdgeMeasure mode, std::size_t trials,
                                      std::uint64_t rng_seed) {
    if (mode == EdgeMeasure::weight) return expected_crossing_analytic(g);
    return expected_crossing_monte_carlo(g, mode, trials, rng_seed);
}

std::vector<RedditComment> shuffle_users(std::span<const RedditComment> comments, ShuffleScope scope,
                                         std::uint64_t rng_seed) {
    std::vector<RedditComment> out(comments.begin(), comments.end());
    Rng rng(rng_seed);
    // Blocks of comment indices whose authors are permuted among themselves.
    std::map<YearMonth, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto key = scope == ShuffleScope::monthly ? YearMonth::from_unix_seconds(out[i].created_utc)
                                                        : YearMonth{};
        blocks[key].push_back(i);
    }
    for (auto& [month, idx] : blocks) {
        std::vector<std::string> authors;
        authors.reserve(idx.size());
        for (auto i : idx) authors.push_back(out[i].author);
        rng.shuffle(std::span<std::string>(authors));
        for (std::size_t j = 0; j < idx.size(); ++j) out[idx[j]].author = std::move(authors[j]);
    }
    return out;
}

PermutationTestResult permutation_test_spearman(std::span<const std::string> order_a,
                                                std::span<const std::string> order_b,
                                                std::size_t trials, std::uint64_t rng_seed) {
    if (trials == 0) throw PreconditionError("permutation test needs at least one trial");
    auto ranks = rank_pairs(order_a, order_b);
    const auto n = ranks.rank_a.size();
    const auto observed_ss = kernels::sum_sq_diff(ranks.rank_a, ranks.rank_b);

    PermutationTestResult result;
    result.observed = spearman_from_sum_sq(observed_ss, n);
    result.trials = trials;
    result.null_max = -std::numeric_limits<double>::infinity();
    std::size_t at_least = 0;
    Rng rng(rng_seed);
    auto shuffled = ranks.rank_b;
    for (std::size_t t = 0; t < trials; ++t) {
        rng.shuffle(std::span<std::int32_t>(shuffled));
        const auto ss = kernels::sum_sq_diff(ranks.rank_a, shuffled);
        // Compare on the integer statistic: rho >= observed <=> ss <= observed ss.
        if (ss <= observed_ss) ++at_least;
        result.null_max = std::max(result.null_max, spearman_from_sum_sq(ss, n));
    }
    result.fraction_at_least = static_cast<double>(at_least) / static_cast<double>(trials);
    return result;
}

}  // namespace invograph
