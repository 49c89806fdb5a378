#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "invograph/records.hpp"

namespace invograph {

// CSV headers, matched exactly.
inline constexpr std::string_view kReplyPairsHeader = "month,src_domain,dst_domain,count";
inline constexpr std::string_view kCoOccurrenceHeader = "month,domain,n_clinton,n_trump";
inline constexpr std::string_view kRetweetTotalsHeader = "month,clinton_total,trump_total";

// Rows are normalized and rows sharing (month, src, dst) are summed. The
// result is sorted by (month, src, dst), so row order never matters.
// Throws ParseError with the line number on malformed rows or count <= 0.
std::vector<ReplyPairRecord> parse_reply_pairs(std::istream& in);

// Same aggregation rules as reply pairs, keyed by (month, domain).
std::vector<CoOccurrenceRecord> parse_cooccurrence(std::istream& in);

// One row per month; a repeated month is an error. Zero totals parse fine and
// are rejected later by the spectrum computation for months it actually uses.
std::vector<RetweetTotals> parse_retweet_totals(std::istream& in);

// JSON-lines, one comment or post per line. Requires id, author, subreddit,
// created_utc and body; parent_id may be missing or null. created_utc may be
// a number or a numeric string (pushshift dumps use both).
std::vector<RedditComment> parse_reddit_comments(std::istream& in);

// http(s) URLs found in free text, reduced to canonical domains. URLs that
// fail normalization are skipped.
std::set<std::string> extract_domains(std::string_view text);

// One domain per line; '#' starts a comment.
std::set<std::string> parse_blacklist(std::istream& in);

std::set<std::string> default_blacklist();

void write_reply_pairs(std::ostream& out, const std::vector<ReplyPairRecord>& records);
void write_cooccurrence(std::ostream& out, const std::vector<CoOccurrenceRecord>& records);
void write_retweet_totals(std::ostream& out, const std::vector<RetweetTotals>& records);
// The body is regenerated as one https URL per domain, which re-parses to the
// same record.
void write_reddit_comments(std::ostream& out, const std::vector<RedditComment>& comments);
void write_blacklist(std::ostream& out, const std::set<std::string>& domains);

}  // namespace invograph
