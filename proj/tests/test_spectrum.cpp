#include <sstream>

#include "doctest.h"
#include "invograph/error.hpp"
#include "invograph/spectrum.hpp"

using namespace invograph;

TEST_CASE("political_score on worked values") {
    CHECK(political_score(0.5, 0.5) == doctest::Approx(0.5));
    CHECK(political_score(0.0, 0.2) == 1.0);
    CHECK(political_score(0.3, 0.1) == doctest::Approx(0.25));
    CHECK_THROWS_AS(political_score(0.0, 0.0), PreconditionError);
}

TEST_CASE("compute_spectrum pools numerators and denominators") {
    const YearMonth jan{2016, 1}, feb{2016, 2};
    const std::vector<CoOccurrenceRecord> co{
        {jan, "a.com", 10, 0}, {jan, "b.com", 5, 5}, {feb, "a.com", 0, 30}, {feb, "c.com", 0, 0}};
    const std::vector<RetweetTotals> totals{{jan, 100, 100}, {feb, 100, 300}};
    const std::vector<YearMonth> both{jan, feb};
    const auto s = compute_spectrum(co, totals, both);
    // a: p_c = 10/200, p_t = 30/400 -> 0.075 / 0.125 = 0.6 (not the mean of 0 and 1).
    CHECK(s.score("a.com") == doctest::Approx(0.6));
    // b: p_c = 5/200, p_t = 5/400 -> 1/3.
    CHECK(s.score("b.com") == doctest::Approx(1.0 / 3.0));
    CHECK(s.find("c.com") == nullptr);
    CHECK_THROWS_AS(s.score("c.com"), PreconditionError);

    const std::vector<YearMonth> mar{{2016, 3}};
    CHECK_THROWS_AS(compute_spectrum(co, totals, mar), PreconditionError);
    const std::vector<RetweetTotals> zero{{jan, 0, 100}};
    const std::vector<YearMonth> jan_only{jan};
    CHECK_THROWS_AS(compute_spectrum(co, zero, jan_only), PreconditionError);
}

TEST_CASE("compute_engagement sums both anchors over the months") {
    const std::vector<CoOccurrenceRecord> co{{{2016, 1}, "a.com", 3, 4}, {{2016, 2}, "a.com", 10, 0}};
    const std::vector<YearMonth> jan{{2016, 1}};
    CHECK(compute_engagement(co, jan).at("a.com") == 7);
    const std::vector<YearMonth> both{{2016, 1}, {2016, 2}};
    CHECK(compute_engagement(co, both).at("a.com") == 17);
}

TEST_CASE("reddit_spectrum counts comments, not URLs") {
    std::vector<RedditComment> c{
        {"1", {}, "u", "HillaryClinton", 0, {"a.com", "b.com"}},
        {"2", {}, "u", "hillaryclinton", 0, {}},
        {"3", {}, "v", "The_Donald", 0, {"b.com"}},
        {"4", {}, "v", "The_Donald", 0, {"b.com"}},
        {"5", {}, "v", "The_Donald", 0, {}},
        {"6", {}, "v", "The_Donald", 0, {}},
        {"7", {}, "w", "politics", 0, {"c.com"}},
    };
    const auto s = reddit_spectrum(c, "hillaryclinton", "the_donald");
    CHECK(s.find("a.com")->p_c == 0.5);
    CHECK(s.find("a.com")->p_t == 0.0);
    CHECK(s.find("b.com")->p_t == 0.5);
    CHECK(s.score("b.com") == doctest::Approx(0.5));
    CHECK(s.find("c.com") == nullptr);
    CHECK_THROWS_AS(reddit_spectrum(c, "hillaryclinton", "sandersforpresident"), PreconditionError);
}

TEST_CASE("spectrum CSV round-trips and is validated") {
    Spectrum s;
    s.points.emplace("a.com", SpectrumPoint{"a.com", 0.1, 0.3, 0.75});
    s.points.emplace("b.co.uk", SpectrumPoint{"b.co.uk", 1.0 / 3.0, 0.0, 0.0});
    std::stringstream buf;
    write_spectrum(buf, s);
    const auto back = read_spectrum(buf);
    CHECK(back.points == s.points);

    std::istringstream bad("domain,p_c,p_t,score\na.com,0.1,0.3,0.5\n");
    CHECK_THROWS_AS(read_spectrum(bad), ParseError);
    std::istringstream dup("domain,p_c,p_t,score\na.com,1,1,0.5\na.com,1,1,0.5\n");
    CHECK_THROWS_AS(read_spectrum(dup), ParseError);
}

TEST_CASE("rank_by_score orders from the Trump end and rejects ties") {
    Spectrum s;
    s.points.emplace("a.com", SpectrumPoint{"a.com", 0.9, 0.1, 0.1});
    s.points.emplace("b.com", SpectrumPoint{"b.com", 0.1, 0.9, 0.9});
    s.points.emplace("c.com", SpectrumPoint{"c.com", 0.5, 0.5, 0.5});
    CHECK(rank_by_score(s) == std::vector<std::string>{"b.com", "c.com", "a.com"});
    const std::vector<std::string> sub{"a.com", "c.com"};
    CHECK(rank_by_score(s, sub) == std::vector<std::string>{"c.com", "a.com"});
    s.points.emplace("d.com", SpectrumPoint{"d.com", 0.2, 0.2, 0.5});
    CHECK_THROWS_AS(rank_by_score(s), DegenerateDataError);
}

TEST_CASE("restrict_to_scored drops unscored nodes and their edges") {
    DigraphBuilder b;
    b.add_edge("a.com", "b.com", 2);
    b.add_edge("b.com", "x.com", 7);
    b.add_edge("x.com", "a.com", 1);
    InvocationGraph g{{2016, 1}, b.build()};
    Spectrum s;
    s.points.emplace("a.com", SpectrumPoint{"a.com", 0.5, 0.5, 0.5});
    s.points.emplace("b.com", SpectrumPoint{"b.com", 0.2, 0.8, 0.8});
    const auto r = restrict_to_scored(g, s);
    CHECK(r.graph.node_count() == 2);
    CHECK(r.graph.edge_count() == 1);
    CHECK(r.graph.weight("a.com", "b.com") == 2);
    CHECK(r.month == g.month);
}
