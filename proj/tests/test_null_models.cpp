#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "invograph/error.hpp"
#include "invograph/null_models.hpp"
#include "support.hpp"
#include "t3_fixture.hpp"

using namespace invograph;

TEST_CASE("rewiring a single edge is forced") {
    DigraphBuilder b;
    b.add_edge("a.com", "b.com", 4);
    const auto g = b.build();
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(rewire(g, seed).graph == g);
}

TEST_CASE("rewiring a two-cycle yields each matching about half the time") {
    DigraphBuilder b;
    b.add_edge("a.com", "b.com", 1);
    b.add_edge("b.com", "a.com", 1);
    const auto g = b.build();
    DigraphBuilder loops;
    loops.add_edge("a.com", "a.com", 1);
    loops.add_edge("b.com", "b.com", 1);
    const auto l = loops.build();
    int same = 0, looped = 0;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const auto r = rewire(g, seed).graph;
        same += r == g;
        looped += r == l;
    }
    CHECK(same + looped == 2000);
    CHECK(same > 900);
    CHECK(looped > 900);
}

TEST_CASE("rewire preserves weighted degrees and is seed-deterministic") {
    std::mt19937 gen(21);
    for (int t = 0; t < 20; ++t) {
        const auto g = testing::random_graph(gen, 15, 50, 12);
        const auto r = rewire(g, 100 + t);
        CHECK(r.rng_seed == static_cast<std::uint64_t>(100 + t));
        CHECK(std::equal(r.graph.nodes().begin(), r.graph.nodes().end(), g.nodes().begin(), g.nodes().end()));
        CHECK(r.graph.out_weights() == g.out_weights());
        CHECK(r.graph.in_weights() == g.in_weights());
        CHECK(rewire(g, 100 + t).graph == r.graph);
    }
}

TEST_CASE("T3 analytic expectation") {
    const auto g = t3_embedded();
    const auto n = expected_crossing_analytic(g);
    CHECK(n.mean.point_right[1] == doctest::Approx(1.5));  // 3 * 3 / 6
    CHECK(n.mean.f_right == std::vector<double>{2.5, 2.0});
    // f<- at y = 0.5: Out(s > y) * In(s < y) / W = 2 * 1 / 6.
    CHECK(n.mean.point_left[1] == doctest::Approx(1.0 / 3.0));
    CHECK(n.mean.right_at(0.05) == 0.0);
    CHECK(n.trials == 0);
    CHECK(expected_crossing(g, EdgeMeasure::weight, 10, 1).mean.point_right[1] == doctest::Approx(1.5));
}

TEST_CASE("analytic expectation needs weight") {
    DigraphBuilder b;
    b.add_node("a.com");
    EmbeddedGraph g(b.build(), std::vector<double>{0.5});
    CHECK_THROWS_AS(expected_crossing_analytic(g), DegenerateDataError);
}

TEST_CASE("analytic expectation matches Monte Carlo in weight mode") {
    std::mt19937 gen(23);
    auto graph = testing::random_graph(gen, 12, 40, 6);
    EmbeddedGraph g(std::move(graph), testing::random_scores(gen, 12));
    const auto exact = expected_crossing_analytic(g);
    const auto mc = expected_crossing_monte_carlo(g, EdgeMeasure::weight, 800, 5);
    CHECK(mc.trials == 800);
    for (std::size_t j = 0; j < exact.mean.f_right.size(); ++j) {
        CHECK(std::abs(exact.mean.f_right[j] - mc.mean.f_right[j]) <= 3.0 * mc.se_right[j] + 1e-12);
        CHECK(std::abs(exact.mean.f_left[j] - mc.mean.f_left[j]) <= 3.0 * mc.se_left[j] + 1e-12);
    }
}

TEST_CASE("count-mode Monte Carlo agrees with an independent stub-matching simulation") {
    std::mt19937 gen(29);
    auto graph = testing::random_graph(gen, 10, 25, 4);
    const auto scores = testing::random_scores(gen, 10);
    EmbeddedGraph g(graph, scores);
    const std::size_t trials = 1000;
    const auto mc = expected_crossing_monte_carlo(g, EdgeMeasure::count, trials, 77);

    std::vector<std::uint32_t> out_stubs, in_stubs;
    for (const auto& e : graph.edges()) {
        for (std::int64_t k = 0; k < e.weight; ++k) {
            out_stubs.push_back(e.src);
            in_stubs.push_back(e.dst);
        }
    }
    const auto& bp = mc.mean.breakpoints;
    std::vector<double> sum(bp.size() - 1, 0.0), sum_sq(bp.size() - 1, 0.0);
    std::mt19937_64 sim(4242);
    for (std::size_t t = 0; t < trials; ++t) {
        std::shuffle(in_stubs.begin(), in_stubs.end(), sim);
        std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (std::size_t i = 0; i < out_stubs.size(); ++i) pairs.insert({out_stubs[i], in_stubs[i]});
        for (std::size_t j = 0; j + 1 < bp.size(); ++j) {
            const double y = 0.5 * (bp[j] + bp[j + 1]);
            double c = 0;
            for (const auto& [s, d] : pairs) c += scores[s] < y && y < scores[d];
            sum[j] += c;
            sum_sq[j] += c * c;
        }
    }
    for (std::size_t j = 0; j + 1 < bp.size(); ++j) {
        const double n = static_cast<double>(trials);
        const double mean = sum[j] / n;
        const double var = (sum_sq[j] - n * mean * mean) / (n - 1);
        const double se = std::sqrt(std::max(var, 0.0) / n);
        const double tol = 3.0 * std::sqrt(se * se + mc.se_right[j] * mc.se_right[j]) + 1e-12;
        CHECK(std::abs(mean - mc.mean.f_right[j]) <= tol);
    }
}

namespace {

std::vector<RedditComment> sample_comments() {
    std::vector<RedditComment> c;
    const std::int64_t jan = 1451606400, feb = 1454284800;
    const char* authors[] = {"ann", "bob", "cy", "ann", "dee", "bob", "ann", "eve"};
    for (int i = 0; i < 8; ++i) {
        c.push_back({"id" + std::to_string(i), i ? std::optional<std::string>("t1_id0") : std::nullopt, authors[i],
                     i % 2 ? "politics" : "hillaryclinton", (i < 4 ? jan : feb) + i * 100, {}});
    }
    return c;
}

std::map<std::string, int> author_counts(const std::vector<RedditComment>& c, bool by_month) {
    std::map<std::string, int> n;
    for (const auto& x : c) {
        n[(by_month ? YearMonth::from_unix_seconds(x.created_utc).to_string() + "/" : std::string()) + x.author]++;
    }
    return n;
}

}  // namespace

TEST_CASE("shuffle_users preserves authorship multisets") {
    const auto c = sample_comments();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = shuffle_users(c, ShuffleScope::global, seed);
        CHECK(author_counts(g, false) == author_counts(c, false));
        const auto m = shuffle_users(c, ShuffleScope::monthly, seed);
        CHECK(author_counts(m, true) == author_counts(c, true));
        for (std::size_t i = 0; i < c.size(); ++i) {
            auto a = g[i];
            a.author = c[i].author;
            CHECK(a == c[i]);
        }
        CHECK(shuffle_users(c, ShuffleScope::global, seed) == g);
    }
    const std::vector<RedditComment> one(c.begin(), c.begin() + 1);
    CHECK(shuffle_users(one, ShuffleScope::global, 3) == one);
}

TEST_CASE("shuffle_users actually moves authors") {
    const auto c = sample_comments();
    int moved = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) moved += shuffle_users(c, ShuffleScope::global, seed) != c;
    CHECK(moved >= 8);
}

TEST_CASE("permutation test on trivial orderings") {
    std::vector<std::string> items;
    for (int i = 0; i < 21; ++i) items.push_back("d" + std::to_string(i) + ".com");
    auto same = permutation_test_spearman(items, items, 100, 1);
    CHECK(same.observed == 1.0);
    CHECK(same.trials == 100);
    std::vector<std::string> rev(items.rbegin(), items.rend());
    auto r = permutation_test_spearman(items, rev, 100, 1);
    CHECK(r.observed == doctest::Approx(-1.0));
    CHECK(r.fraction_at_least == 1.0);
    CHECK(r.null_max <= 1.0);

    auto other = items;
    other.back() = "zz.com";
    CHECK_THROWS_AS(permutation_test_spearman(items, other, 10, 1), PreconditionError);
    CHECK_THROWS_AS(permutation_test_spearman(items, items, 0, 1), PreconditionError);
}
