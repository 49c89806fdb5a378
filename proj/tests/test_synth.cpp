#include <cmath>
#include <sstream>

#include "doctest.h"
#include "invograph/align.hpp"
#include "invograph/embed_metrics.hpp"
#include "invograph/error.hpp"
#include "invograph/graphbuild.hpp"
#include "invograph/ingest.hpp"
#include "invograph/spectrum.hpp"
#include "invograph/synth.hpp"
#include "support.hpp"

using namespace invograph;

TEST_CASE("synth rejects infeasible configs") {
    SynthConfig cfg;
    cfg.n_domains = 2;
    CHECK_THROWS_AS(generate(cfg), PreconditionError);
    cfg = {};
    cfg.volume = 0;
    CHECK_THROWS_AS(generate(cfg), PreconditionError);
    cfg = {};
    cfg.right_bias = -1;
    CHECK_THROWS_AS(generate(cfg), PreconditionError);
    cfg = {};
    cfg.months.clear();
    CHECK_THROWS_AS(generate(cfg), PreconditionError);
}

TEST_CASE("synth is deterministic and plants distinct interior scores") {
    SynthConfig cfg;
    cfg.months = parse_month_list("2016-01:2016-03");
    const auto a = generate(cfg), b = generate(cfg);
    CHECK(a.reply_pairs == b.reply_pairs);
    CHECK(a.cooccurrence == b.cooccurrence);
    CHECK(a.ground_truth.size() == cfg.n_domains);
    CHECK(a.ground_truth.contains("nytimes.com"));
    std::set<double> seen;
    for (const auto& [d, s] : a.ground_truth) {
        CHECK(s > 0.0);
        CHECK(s < 1.0);
        CHECK(seen.insert(s).second);
    }
    cfg.rng_seed = 2;
    CHECK(generate(cfg).reply_pairs != a.reply_pairs);
}

TEST_CASE("compute_spectrum recovers planted scores") {
    SynthConfig cfg;
    cfg.months = parse_month_list("2016-01:2016-04");
    const auto data = generate(cfg);
    for (std::size_t m = 0; m <= cfg.months.size(); ++m) {
        const std::vector<YearMonth> period = m == cfg.months.size()
                                                  ? cfg.months
                                                  : std::vector<YearMonth>{cfg.months[m]};
        const auto s = compute_spectrum(data.cooccurrence, data.totals, period);
        for (const auto& [d, score] : data.ground_truth) CHECK(std::abs(s.score(d) - score) <= 1e-9);
    }
}

TEST_CASE("synth output passes through the graph filters") {
    SynthConfig cfg;
    const auto data = generate(cfg);
    const auto month = cfg.months.front();
    const auto engagement = compute_engagement(data.cooccurrence, cfg.months);
    BuildConfig bc;
    bc.blacklist = data.blacklist;
    const auto raw = aggregate_raw_graph(data.reply_pairs, month);
    CHECK(raw.has_self_loops());
    CHECK(raw.contains("twitter.com"));
    CHECK(raw.contains("lowreach.net"));
    const auto g = build_invocation_graph(raw, month, engagement, bc);
    CHECK_FALSE(g.graph.contains("twitter.com"));
    CHECK_FALSE(g.graph.contains("lowreach.net"));
    CHECK(g.graph.node_count() == cfg.n_domains);
}

TEST_CASE("synth files re-parse to the same records") {
    SynthConfig cfg;
    cfg.n_domains = 8;
    const auto data = generate(cfg);
    CommentSynthConfig cc;
    cc.days = 5;
    cc.domain_scores = data.ground_truth;
    const auto comments = generate_comments(cc);
    testing::TempDir dir("synth");
    const auto files = write_synth_files(dir.path(), data, &comments);
    CHECK(files.written.size() == 6);
    std::istringstream rp(testing::slurp(dir.path() / "reply_pairs.csv"));
    CHECK(parse_reply_pairs(rp) == data.reply_pairs);
    std::istringstream co(testing::slurp(dir.path() / "cooccur.csv"));
    CHECK(parse_cooccurrence(co) == data.cooccurrence);
    std::istringstream cm(testing::slurp(dir.path() / "comments.jsonl"));
    CHECK(parse_reddit_comments(cm) == comments);
    CHECK(testing::slurp(dir.path() / "ground_truth.csv").rfind("domain,score\n", 0) == 0);
}

TEST_CASE("homophily sign shows up in the slope") {
    auto slope_for = [](double lambda, std::uint64_t seed) {
        SynthConfig cfg;
        cfg.homophily = lambda;
        cfg.rng_seed = seed;
        cfg.include_noise = false;
        const auto data = generate(cfg);
        const auto g = aggregate_raw_graph(data.reply_pairs, cfg.months.front());
        std::vector<std::pair<std::string, double>> scores(data.ground_truth.begin(), data.ground_truth.end());
        return delta_out_slope(EmbeddedGraph(g, testing::spectrum_from_scores(scores))).slope;
    };
    double lo = 0, mid = 0, hi = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        lo += slope_for(-4, seed);
        mid += slope_for(0, seed);
        hi += slope_for(4, seed);
    }
    CHECK(lo < mid);
    CHECK(mid < hi);
    CHECK(std::abs(mid / 5) < 0.1);
}

TEST_CASE("well-separated spectra beat the shuffled alignment baseline") {
    SynthConfig cfg;
    cfg.n_domains = 20;
    const auto data = generate(cfg);
    Spectrum a, b;
    for (const auto& [d, s] : data.ground_truth) {
        a.points.emplace(d, SpectrumPoint{d, 1 - s, s, s});
        b.points.emplace(d, SpectrumPoint{d, 0.5 * (1 - s), 2 * s, 2 * s / (0.5 * (1 - s) + 2 * s)});
    }
    const auto base = shuffled_alignment_baseline(a, b, Norm::l2, 200, 4);
    std::vector<double> nulls = base.null_objectives;
    std::sort(nulls.begin(), nulls.end());
    CHECK(base.real_objective < nulls[9]);
}

TEST_CASE("comment synth groups and thread structure") {
    CommentSynthConfig cfg;
    cfg.days = 10;
    const auto c = generate_comments(cfg);
    std::set<std::string> ids;
    std::size_t replies = 0;
    for (const auto& x : c) {
        CHECK(ids.insert(x.id).second);
        if (x.parent_id) {
            ++replies;
            CHECK(x.parent_id->rfind("t1_", 0) == 0);
        }
    }
    CHECK(replies > 0);
    CHECK(std::is_sorted(c.begin(), c.end(),
                         [](const auto& a, const auto& b) { return a.created_utc < b.created_utc; }));
    CHECK(generate_comments(cfg) == c);
}
