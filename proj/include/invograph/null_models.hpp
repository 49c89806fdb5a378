#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "invograph/digraph.hpp"
#include "invograph/embed_metrics.hpp"
#include "invograph/records.hpp"

namespace invograph {

struct RewiredGraph {
    Digraph graph;  // self-loops allowed
    std::uint64_t rng_seed = 0;
};

// Configuration-model rewiring with unit stubs. Each edge of weight w gives w
// out-stubs at its source and w in-stubs at its target; stubs are listed in
// node-name order, the in-stubs are shuffled, and out-stub i is matched to
// in-stub i. Weighted in- and out-degrees are preserved exactly.
RewiredGraph rewire(const Digraph& graph, std::uint64_t rng_seed);

// Crossing values expected under rewiring, on the observed graph's
// breakpoints. The standard errors are indexed like the profile's vectors.
struct NullCrossingProfile {
    CrossingProfile mean;
    std::vector<double> se_right;  // per interval; all 0 when analytic
    std::vector<double> se_left;
    std::vector<double> se_point_right;  // per breakpoint
    std::vector<double> se_point_left;
    std::size_t trials = 0;  // 0 when analytic
};

// Weight mode only: E[f->(y)] = Out(s < y) * In(s > y) / total weight, by
// linearity over uniformly matched stubs. Throws DegenerateDataError when the
// graph has no weight.
NullCrossingProfile expected_crossing_analytic(const EmbeddedGraph& g);

// Mean and standard error over `trials` rewires, trial t seeded with
// derive_seed(rng_seed, t).
NullCrossingProfile expected_crossing_monte_carlo(const EmbeddedGraph& g, EdgeMeasure mode,
                                                  std::size_t trials, std::uint64_t rng_seed);

// Analytic in weight mode, Monte Carlo in count mode.
NullCrossingProfile expected_crossing(const EmbeddedGraph& g, EdgeMeasure mode,
                                      std::size_t trials, std::uint64_t rng_seed);

enum class ShuffleScope { global, monthly };

// Reassigns authors to comments uniformly at random while keeping each user's
// comment count, either over the whole dataset or within each calendar month.
// Only the author field changes.
std::vector<RedditComment> shuffle_users(std::span<const RedditComment> comments,
                                         ShuffleScope scope, std::uint64_t rng_seed);

struct PermutationTestResult {
    double observed = 0.0;
    double null_max = 0.0;
    double fraction_at_least = 0.0;  // share of null rho >= observed
    std::size_t trials = 0;
};

// Null distribution from uniformly random reorderings of `order_b`.
PermutationTestResult permutation_test_spearman(std::span<const std::string> order_a,
                                                std::span<const std::string> order_b,
                                                std::size_t trials, std::uint64_t rng_seed);

}  // namespace invograph
