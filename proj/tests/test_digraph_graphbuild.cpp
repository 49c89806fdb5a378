#include <random>
#include <sstream>

#include "doctest.h"
#include "invograph/error.hpp"
#include "invograph/graphbuild.hpp"
#include "support.hpp"

using namespace invograph;

TEST_CASE("Digraph canonical form does not depend on insertion order") {
    DigraphBuilder a, b;
    a.add_edge("x.com", "y.com", 2);
    a.add_edge("y.com", "x.com", 1);
    a.add_edge("x.com", "y.com", 3);
    b.add_edge("y.com", "x.com", 1);
    b.add_edge("x.com", "y.com", 5);
    const auto ga = a.build(), gb = b.build();
    CHECK(ga == gb);
    CHECK(ga.weight("x.com", "y.com") == 5);
    CHECK(ga.weight("y.com", "z.com") == 0);
    CHECK(ga.total_weight() == 6);
    CHECK(ga.out_weights() == std::vector<std::int64_t>{5, 1});
    CHECK(ga.in_weights() == std::vector<std::int64_t>{1, 5});
}

TEST_CASE("Digraph::from_indexed validates and merges") {
    CHECK_THROWS_AS(Digraph::from_indexed({"b", "a"}, {}), PreconditionError);
    CHECK_THROWS_AS(Digraph::from_indexed({"a", "a"}, {}), PreconditionError);
    CHECK_THROWS_AS(Digraph::from_indexed({"a"}, {{0, 1, 1}}), PreconditionError);
    const auto g = Digraph::from_indexed({"a", "b"}, {{1, 0, 2}, {0, 1, 1}, {1, 0, 3}, {0, 0, 0}});
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1, 1});
    CHECK(g.edges()[1] == Edge{1, 0, 5});
    CHECK_FALSE(g.has_self_loops());
}

namespace {

// s is the seed. a and b hang off it through heavy edges; c only has a light
// edge; e only reaches s through blacklisted twitter.com; f is below p.
struct BuildFixture {
    std::vector<ReplyPairRecord> records;
    EngagementMap engagement;
    BuildConfig cfg;

    BuildFixture() {
        const YearMonth m{2016, 1};
        records = {
            {m, "s.com", "s.com", 500},        {m, "a.com", "s.com", 120},
            {m, "b.com", "a.com", 100},        {m, "a.com", "b.com", 5},
            {m, "c.com", "s.com", 50},         {m, "twitter.com", "s.com", 900},
            {m, "e.com", "twitter.com", 900},  {m, "f.com", "s.com", 1000},
            {YearMonth{2016, 2}, "c.com", "s.com", 5000},
        };
        for (const char* d : {"s.com", "a.com", "b.com", "c.com", "e.com", "twitter.com"}) engagement[d] = 20000;
        engagement["f.com"] = 9999;
        cfg.seed_domain = "s.com";
    }
};

}  // namespace

TEST_CASE("build_invocation_graph applies blacklist, engagement, self-loop and BFS filters") {
    BuildFixture fx;
    const auto raw = aggregate_raw_graph(fx.records, {2016, 1});
    CHECK(raw.has_self_loops());
    CHECK(raw.weight("c.com", "s.com") == 50);  // other month excluded

    const auto g = build_invocation_graph(raw, {2016, 1}, fx.engagement, fx.cfg);
    CHECK(std::vector<std::string>(g.graph.nodes().begin(), g.graph.nodes().end()) ==
          std::vector<std::string>{"a.com", "b.com", "s.com"});
    CHECK_FALSE(g.graph.has_self_loops());
    CHECK(g.graph.weight("a.com", "b.com") == 5);  // light edge between reached nodes stays
    CHECK(g.graph.total_weight() == 225);
}

TEST_CASE("edge threshold gates reachability, not edges") {
    BuildFixture fx;
    fx.cfg.edge_threshold = 50;
    const auto g = build_invocation_graph(aggregate_raw_graph(fx.records, {2016, 1}), {2016, 1}, fx.engagement, fx.cfg);
    CHECK(g.graph.contains("c.com"));
    fx.cfg.edge_threshold = 101;
    const auto g2 = build_invocation_graph(aggregate_raw_graph(fx.records, {2016, 1}), {2016, 1}, fx.engagement, fx.cfg);
    CHECK_FALSE(g2.graph.contains("b.com"));
    CHECK(g2.graph.contains("a.com"));
}

TEST_CASE("engagement threshold is inclusive") {
    BuildFixture fx;
    fx.engagement["f.com"] = 10000;
    const auto g = build_invocation_graph(aggregate_raw_graph(fx.records, {2016, 1}), {2016, 1}, fx.engagement, fx.cfg);
    CHECK(g.graph.contains("f.com"));
}

TEST_CASE("seed problems are reported") {
    BuildFixture fx;
    const auto raw = aggregate_raw_graph(fx.records, {2016, 1});
    auto cfg = fx.cfg;
    cfg.seed_domain = "nytimes.com";
    CHECK_THROWS_AS(build_invocation_graph(raw, {2016, 1}, fx.engagement, cfg), PreconditionError);
    cfg = fx.cfg;
    cfg.blacklist.insert("s.com");
    CHECK_THROWS_AS(build_invocation_graph(raw, {2016, 1}, fx.engagement, cfg), PreconditionError);
    auto low = fx.engagement;
    low["s.com"] = 10;
    CHECK_THROWS_AS(build_invocation_graph(raw, {2016, 1}, low, fx.cfg), PreconditionError);
    cfg = fx.cfg;
    cfg.edge_threshold = 100000;
    CHECK_THROWS_AS(build_invocation_graph(raw, {2016, 1}, fx.engagement, cfg), DegenerateDataError);
}

TEST_CASE("built graphs are connected from the seed over heavy edges") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto raw = testing::random_graph(gen, 30, 120, 200, true);
        EngagementMap engagement;
        for (const auto& n : raw.nodes()) engagement[n] = 20000;
        BuildConfig cfg;
        cfg.seed_domain = raw.name(0);
        InvocationGraph g;
        try {
            g = build_invocation_graph(raw, {2016, 1}, engagement, cfg);
        } catch (const DegenerateDataError&) {
            continue;
        }
        // Every node must reach the seed over heavy edges, checked by a
        // fixed-point relaxation independent of the BFS.
        std::set<std::string> reach{cfg.seed_domain};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& e : g.graph.edges()) {
                if (e.weight < cfg.edge_threshold) continue;
                const auto& s = g.graph.name(e.src);
                const auto& d = g.graph.name(e.dst);
                if (reach.contains(s) != reach.contains(d)) {
                    reach.insert(s);
                    reach.insert(d);
                    grew = true;
                }
            }
        }
        CHECK(reach.size() == g.graph.node_count());
        CHECK_FALSE(g.graph.has_self_loops());
    }
}

TEST_CASE("graph CSV and sidecar round-trip") {
    BuildFixture fx;
    const auto g = build_invocation_graph(aggregate_raw_graph(fx.records, {2016, 1}), {2016, 1}, fx.engagement, fx.cfg);
    std::stringstream edges, sidecar(graph_sidecar_json(g, fx.cfg));
    write_graph_edges(edges, g);
    CHECK(read_graph(edges, sidecar) == g);

    std::istringstream bad_edges("src,dst,weight\na.com,zzz.com,1\n");
    std::istringstream side2(graph_sidecar_json(g, fx.cfg));
    CHECK_THROWS_AS(read_graph(bad_edges, side2), ParseError);
}
