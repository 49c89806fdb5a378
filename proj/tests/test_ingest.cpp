#include <sstream>

#include "doctest.h"
#include "invograph/error.hpp"
#include "invograph/ingest.hpp"

using namespace invograph;

TEST_CASE("reply pairs are normalized, aggregated and sorted") {
    std::istringstream in(
        "month,src_domain,dst_domain,count\n"
        "2016-02,www.cnn.com,foxnews.com,3\n"
        "2016-01,https://breitbart.com/a,nytimes.com,5\n"
        "2016-02,cnn.com,http://www.foxnews.com/x,4\n");
    const auto r = parse_reply_pairs(in);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == ReplyPairRecord{{2016, 1}, "breitbart.com", "nytimes.com", 5});
    CHECK(r[1] == ReplyPairRecord{{2016, 2}, "cnn.com", "foxnews.com", 7});
}

TEST_CASE("reply pair errors carry line numbers") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            parse_reply_pairs(in);
        } catch (const ParseError& e) {
            return std::string(e.what()).find(needle) != std::string::npos;
        }
        return false;
    };
    const std::string h = "month,src_domain,dst_domain,count\n";
    CHECK(fails_with(h + "2016-01,a.com,b.com,0\n", "line 2"));
    CHECK(fails_with(h + "2016-01,a.com,b.com\n", "line 2"));
    CHECK(fails_with(h + "2016-01,a.com,b.com,1\n2016-1,a.com,b.com,1\n", "line 3"));
    CHECK(fails_with("month,src,dst,count\n", "header"));
}

TEST_CASE("co-occurrence and totals") {
    std::istringstream co(
        "month,domain,n_clinton,n_trump\n2016-01,a.com,1,2\n2016-01,www.a.com,3,0\n2016-02,b.com,0,0\n");
    const auto c = parse_cooccurrence(co);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == CoOccurrenceRecord{{2016, 1}, "a.com", 4, 2});

    std::istringstream neg("month,domain,n_clinton,n_trump\n2016-01,a.com,-1,2\n");
    CHECK_THROWS_AS(parse_cooccurrence(neg), ParseError);

    std::istringstream tot("month,clinton_total,trump_total\n2016-01,10,20\n2016-01,1,1\n");
    CHECK_THROWS_AS(parse_retweet_totals(tot), ParseError);
}

TEST_CASE("extract_domains scans http(s) URLs in free text") {
    const auto d = extract_domains(
        "see https://www.nytimes.com/x, and (http://bbc.co.uk/news). also [link](https://cnn.com/a) "
        "but not ftp://x.com or http://bad_host or www.foxnews.com");
    CHECK(d == std::set<std::string>{"bbc.co.uk", "cnn.com", "nytimes.com"});
}

TEST_CASE("reddit JSON-lines parse with pushshift quirks") {
    std::istringstream in(
        R"({"id":"a1","author":"u1","subreddit":"politics","created_utc":"1451606400","body":"x https://cnn.com/y"})"
        "\n\n"
        R"({"id":"a2","parent_id":"t1_a1","author":"u2","subreddit":"politics","created_utc":1451606500.0,"body":""})"
        "\n"
        R"({"id":"a3","parent_id":null,"author":"[deleted]","subreddit":"The_Donald","created_utc":1451606600,"body":"no url"})"
        "\n");
    const auto c = parse_reddit_comments(in);
    REQUIRE(c.size() == 3);
    CHECK(c[0].created_utc == 1451606400);
    CHECK(c[0].domains == std::set<std::string>{"cnn.com"});
    CHECK(*c[1].parent_id == "t1_a1");
    CHECK_FALSE(c[2].parent_id.has_value());
}

TEST_CASE("reddit parse errors name the record") {
    std::istringstream missing(R"({"id":"a","author":"u","subreddit":"s","body":""})" "\n");
    CHECK_THROWS_AS(parse_reddit_comments(missing), ParseError);
    std::istringstream dup(R"({"id":"a","author":"u","subreddit":"s","created_utc":1,"body":""})" "\n"
                           R"({"id":"a","author":"v","subreddit":"s","created_utc":2,"body":""})" "\n");
    try {
        parse_reddit_comments(dup);
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("record 2") != std::string::npos);
    }
    std::istringstream junk("{not json}\n");
    CHECK_THROWS_AS(parse_reddit_comments(junk), ParseError);
}

TEST_CASE("writers round-trip through the parsers") {
    const std::vector<ReplyPairRecord> pairs{{{2016, 1}, "a.com", "b.co.uk", 3}, {{2016, 2}, "b.co.uk", "a.com", 1}};
    std::stringstream s1;
    write_reply_pairs(s1, pairs);
    CHECK(parse_reply_pairs(s1) == pairs);

    const std::vector<CoOccurrenceRecord> co{{{2016, 1}, "a.com", 0, 5}};
    std::stringstream s2;
    write_cooccurrence(s2, co);
    CHECK(parse_cooccurrence(s2) == co);

    const std::vector<RetweetTotals> tot{{{2016, 1}, 7, 9}};
    std::stringstream s3;
    write_retweet_totals(s3, tot);
    CHECK(parse_retweet_totals(s3) == tot);

    std::vector<RedditComment> comments(2);
    comments[0] = {"x1", std::nullopt, "alice", "hillaryclinton", 100, {"cnn.com", "nytimes.com"}};
    comments[1] = {"x2", "t1_x1", "bob", "politics", 200, {}};
    std::stringstream s4;
    write_reddit_comments(s4, comments);
    CHECK(parse_reddit_comments(s4) == comments);

    std::stringstream s5;
    write_blacklist(s5, default_blacklist());
    CHECK(parse_blacklist(s5) == default_blacklist());
}

TEST_CASE("blacklist files allow comments and normalize entries") {
    std::istringstream in("# social\nwww.Twitter.com\n\nyoutube.com  # video\n");
    CHECK(parse_blacklist(in) == std::set<std::string>{"twitter.com", "youtube.com"});
}
