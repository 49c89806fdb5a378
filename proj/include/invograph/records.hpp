#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invograph/month.hpp"

namespace invograph {

// One (month, src, dst) aggregate of tweet-reply pairs: a tweet with a page
// from `src_domain` posted in reply to a tweet with a page from `dst_domain`.
struct ReplyPairRecord {
    YearMonth month;
    std::string src_domain;
    std::string dst_domain;
    std::int64_t count = 0;

    auto operator<=>(const ReplyPairRecord&) const = default;
};

// Same-day co-occurrences of a domain with retweets of either anchor account.
struct CoOccurrenceRecord {
    YearMonth month;
    std::string domain;
    std::int64_t n_clinton = 0;
    std::int64_t n_trump = 0;

    auto operator<=>(const CoOccurrenceRecord&) const = default;
};

struct RetweetTotals {
    YearMonth month;
    std::int64_t clinton_total = 0;
    std::int64_t trump_total = 0;

    auto operator<=>(const RetweetTotals&) const = default;
};

struct RedditComment {
    std::string id;
    std::optional<std::string> parent_id;  // absent for top-level posts
    std::string author;
    std::string subreddit;
    std::int64_t created_utc = 0;
    std::set<std::string> domains;  // canonical domains linked from the body

    auto operator<=>(const RedditComment&) const = default;
};

}  // namespace invograph
