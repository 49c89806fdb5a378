#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "invograph/csv.hpp"
#include "invograph/domain.hpp"
#include "invograph/error.hpp"
#include "invograph/month.hpp"

using namespace invograph;

TEST_CASE("normalize_domain strips URL parts and subdomains") {
    CHECK(normalize_domain("https://www.NYTimes.com/2016/01/article.html?x=1#top") == "nytimes.com");
    CHECK(normalize_domain("http://user:pw@edition.cnn.com:8080/") == "cnn.com");
    CHECK(normalize_domain("  bbc.co.uk  ") == "bbc.co.uk");
    CHECK(normalize_domain("news.bbc.co.uk") == "bbc.co.uk");
    CHECK(normalize_domain("www.dailymail.co.uk.") == "dailymail.co.uk");
    CHECK(normalize_domain("//foxnews.com/politics") == "foxnews.com");
    CHECK(normalize_domain("10.0.0.1") == "10.0.0.1");
}

TEST_CASE("normalize_domain is idempotent") {
    for (const char* raw : {"https://a.b.example.com/x", "www.theguardian.com", "m.abc.net.au", "x.co.uk"}) {
        const auto once = normalize_domain(raw);
        CHECK(normalize_domain(once) == once);
    }
}

TEST_CASE("normalize_domain rejects hosts that are not domains") {
    CHECK_THROWS_AS(normalize_domain(""), ParseError);
    CHECK_THROWS_AS(normalize_domain("localhost"), ParseError);
    CHECK_THROWS_AS(normalize_domain("co.uk"), ParseError);
    CHECK_THROWS_AS(normalize_domain("bad domain.com"), ParseError);
    CHECK_THROWS_AS(normalize_domain("a..com"), ParseError);
    CHECK_THROWS_AS(normalize_domain("-x.com"), ParseError);
    CHECK_THROWS_AS(normalize_domain("host.123"), ParseError);
}

TEST_CASE("multi-label suffix list stays sorted for binary search") {
    const auto s = multi_label_suffixes();
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
}

TEST_CASE("YearMonth parsing and arithmetic") {
    CHECK(YearMonth::parse("2016-09") == YearMonth{2016, 9});
    CHECK(YearMonth{2016, 12}.next() == YearMonth{2017, 1});
    CHECK(YearMonth{2016, 2}.to_string() == "2016-02");
    CHECK(YearMonth::from_unix_seconds(1451606400) == YearMonth{2016, 1});  // 2016-01-01T00:00:00Z
    CHECK(YearMonth::from_unix_seconds(1451606399) == YearMonth{2015, 12});
    CHECK_THROWS_AS(YearMonth::parse("2016-13"), ParseError);
    CHECK_THROWS_AS(YearMonth::parse("2016-1"), ParseError);
    CHECK_THROWS_AS(YearMonth::parse("16-01"), ParseError);
}

TEST_CASE("month lists expand ranges, sort and de-duplicate") {
    const auto m = parse_month_list("2016-10,2016-01:2016-03,2016-02");
    REQUIRE(m.size() == 4);
    CHECK(m.front() == YearMonth{2016, 1});
    CHECK(m.back() == YearMonth{2016, 10});
    CHECK(join_months(m) == "2016-01,2016-02,2016-03,2016-10");
    CHECK(parse_month_list("2015-11:2016-02").size() == 4);
    CHECK_THROWS_AS(parse_month_list("2016-05:2016-01"), ParseError);
}

TEST_CASE("day arithmetic floors and formats") {
    CHECK(unix_day(0) == 0);
    CHECK(unix_day(-1) == -1);
    CHECK(unix_day(1451606400) == 16801);
    CHECK(format_day(16801) == "2016-01-01");
    CHECK(format_day(16801 + 59) == "2016-02-29");
}

TEST_CASE("csv number formatting round-trips") {
    CHECK(csv::format_double(0.1) == "0.1");
    CHECK(csv::format_double(-0.0) == "0");
    CHECK(csv::format_double(1.5) == "1.5");
    for (double v : {1.0 / 3.0, 2.5e-12, 123456789.125, -7.0}) {
        CHECK(csv::parse_double(csv::format_double(v), "v") == v);
    }
    CHECK(csv::parse_int(" 42 ", "n") == 42);
    CHECK_THROWS_AS(csv::parse_int("4x", "n"), ParseError);
    CHECK_THROWS_AS(csv::parse_double("", "x"), ParseError);
}

TEST_CASE("csv header check tolerates a BOM and CRLF") {
    std::istringstream in("\xEF\xBB\xBF" "a,b\r\n1,2\r\n");
    csv::LineReader r(in);
    csv::expect_header(r, "a,b");
    std::string line;
    REQUIRE(r.next(line));
    CHECK(line == "1,2");
    CHECK(r.line_number() == 2);

    std::istringstream bad("a,c\n");
    csv::LineReader rb(bad);
    CHECK_THROWS_AS(csv::expect_header(rb, "a,b"), ParseError);
}
