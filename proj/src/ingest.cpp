#include "invograph/ingest.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include "json.hpp"
#include <ostream>
#include <tuple>
#include <unordered_set>

#include "invograph/csv.hpp"
#include "invograph/domain.hpp"
#include "invograph/error.hpp"

namespace invograph {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Runs `fn` and prefixes any ParseError with the line number.
template <class Fn>
auto at_line(std::size_t line, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        fail_at(line, e.what());
    }
}

std::vector<std::string_view> row_fields(std::string_view line, std::size_t expected,
                                         std::size_t line_no) {
    auto fields = csv::split_fields(line);
    if (fields.size() != expected) {
        fail_at(line_no, "expected " + std::to_string(expected) + " fields, found " +
                             std::to_string(fields.size()));
    }
    return fields;
}

bool is_blank(std::string_view line) { return csv::trim(line).empty(); }

}  // namespace

std::vector<ReplyPairRecord> parse_reply_pairs(std::istream& in) {
    csv::LineReader reader(in);
    csv::expect_header(reader, kReplyPairsHeader);
    std::map<std::tuple<YearMonth, std::string, std::string>, std::int64_t> totals;
    std::string line;
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        const auto n = reader.line_number();
        const auto f = row_fields(line, 4, n);
        at_line(n, [&] {
            const auto month = YearMonth::parse(csv::trim(f[0]));
            auto src = normalize_domain(f[1]);
            auto dst = normalize_domain(f[2]);
            const auto count = csv::parse_int(f[3], "count");
            if (count <= 0) throw ParseError("count must be positive, got " + std::to_string(count));
            totals[{month, std::move(src), std::move(dst)}] += count;
            return 0;
        });
    }
    std::vector<ReplyPairRecord> out;
    out.reserve(totals.size());
    for (auto& [key, count] : totals) {
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
    }
    return out;
}

std::vector<CoOccurrenceRecord> parse_cooccurrence(std::istream& in) {
    csv::LineReader reader(in);
    csv::expect_header(reader, kCoOccurrenceHeader);
    std::map<std::pair<YearMonth, std::string>, std::pair<std::int64_t, std::int64_t>> totals;
    std::string line;
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        const auto n = reader.line_number();
        const auto f = row_fields(line, 4, n);
        at_line(n, [&] {
            const auto month = YearMonth::parse(csv::trim(f[0]));
            auto domain = normalize_domain(f[1]);
            const auto n_c = csv::parse_int(f[2], "n_clinton");
            const auto n_t = csv::parse_int(f[3], "n_trump");
            if (n_c < 0 || n_t < 0) throw ParseError("co-occurrence counts must be non-negative");
            auto& slot = totals[{month, std::move(domain)}];
            slot.first += n_c;
            slot.second += n_t;
            return 0;
        });
    }
    std::vector<CoOccurrenceRecord> out;
    out.reserve(totals.size());
    for (auto& [key, counts] : totals) {
        out.push_back({key.first, key.second, counts.first, counts.second});
    }
    return out;
}

std::vector<RetweetTotals> parse_retweet_totals(std::istream& in) {
    csv::LineReader reader(in);
    csv::expect_header(reader, kRetweetTotalsHeader);
    std::map<YearMonth, RetweetTotals> by_month;
    std::string line;
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        const auto n = reader.line_number();
        const auto f = row_fields(line, 3, n);
        at_line(n, [&] {
            RetweetTotals t;
            t.month = YearMonth::parse(csv::trim(f[0]));
            t.clinton_total = csv::parse_int(f[1], "clinton_total");
            t.trump_total = csv::parse_int(f[2], "trump_total");
            if (t.clinton_total < 0 || t.trump_total < 0) {
                throw ParseError("retweet totals must be non-negative");
            }
            if (!by_month.emplace(t.month, t).second) {
                throw ParseError("duplicate month " + t.month.to_string());
            }
            return 0;
        });
    }
    std::vector<RetweetTotals> out;
    for (auto& [month, t] : by_month) out.push_back(t);
    return out;
}

std::set<std::string> extract_domains(std::string_view text) {
    std::set<std::string> domains;
    auto lower_starts = [&](std::size_t pos, std::string_view prefix) {
        if (pos + prefix.size() > text.size()) return false;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(text[pos + i])) != prefix[i]) return false;
        }
        return true;
    };
    constexpr std::string_view kStop = " \t\r\n)]}>\"'<|*`";
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t skip = 0;
        if (lower_starts(pos, "https://")) skip = 8;
        else if (lower_starts(pos, "http://")) skip = 7;
        if (skip == 0) {
            ++pos;
            continue;
        }
        auto end = text.find_first_of(kStop, pos + skip);
        if (end == std::string_view::npos) end = text.size();
        auto url = text.substr(pos, end - pos);
        while (!url.empty() && std::string_view(".,;:!?").find(url.back()) != std::string_view::npos) {
            url.remove_suffix(1);
        }
        if (url.size() > skip) {
            try {
                domains.insert(normalize_domain(url));
            } catch (const ParseError&) {
                // Not a usable host; leave it out.
            }
        }
        pos = end;
    }
    return domains;
}

std::vector<RedditComment> parse_reddit_comments(std::istream& in) {
    std::vector<RedditComment> out;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        ++index;
        if (is_blank(line)) continue;
        auto fail = [&](const std::string& why) -> void {
            throw ParseError("record " + std::to_string(index) + ": " + why);
        };
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            fail(std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) fail("expected a JSON object");
        auto text_field = [&](const char* key) -> std::string {
            auto it = obj.find(key);
            if (it == obj.end() || it->is_null()) fail(std::string("missing field '") + key + "'");
            if (!it->is_string()) fail(std::string("field '") + key + "' is not a string");
            return it->get<std::string>();
        };
        RedditComment c;
        c.id = text_field("id");
        c.author = text_field("author");
        c.subreddit = text_field("subreddit");
        const auto body = text_field("body");
        if (auto it = obj.find("parent_id"); it != obj.end() && !it->is_null()) {
            if (!it->is_string()) fail("field 'parent_id' is not a string");
            c.parent_id = it->get<std::string>();
        }
        auto created = obj.find("created_utc");
        if (created == obj.end() || created->is_null()) fail("missing field 'created_utc'");
        if (created->is_number_integer()) {
            c.created_utc = created->get<std::int64_t>();
        } else if (created->is_number_float()) {
            c.created_utc = static_cast<std::int64_t>(created->get<double>());
        } else if (created->is_string()) {
            try {
                c.created_utc = csv::parse_int(created->get<std::string>(), "created_utc");
            } catch (const ParseError& e) {
                fail(e.what());
            }
        } else {
            fail("field 'created_utc' is not a timestamp");
        }
        if (c.id.empty()) fail("empty id");
        if (!seen.insert(c.id).second) fail("duplicate id '" + c.id + "'");
        c.domains = extract_domains(body);
        out.push_back(std::move(c));
    }
    return out;
}

std::set<std::string> parse_blacklist(std::istream& in) {
    std::set<std::string> out;
    csv::LineReader reader(in);
    std::string line;
    while (reader.next(line)) {
        auto text = std::string_view(line);
        text = csv::trim(text.substr(0, text.find('#')));
        if (text.empty()) continue;
        at_line(reader.line_number(), [&] { return out.insert(normalize_domain(text)); });
    }
    return out;
}

std::set<std::string> default_blacklist() {
    return {"bit.ly", "facebook.com", "imgur.com", "instagram.com", "twitter.com", "youtube.com"};
}

void write_reply_pairs(std::ostream& out, const std::vector<ReplyPairRecord>& records) {
    out << kReplyPairsHeader << '\n';
    csv::Writer w(out);
    for (const auto& r : records) {
        w.field(r.month.to_string()).field(r.src_domain).field(r.dst_domain).field(r.count).end_row();
    }
}

void write_cooccurrence(std::ostream& out, const std::vector<CoOccurrenceRecord>& records) {
    out << kCoOccurrenceHeader << '\n';
    csv::Writer w(out);
    for (const auto& r : records) {
        w.field(r.month.to_string()).field(r.domain).field(r.n_clinton).field(r.n_trump).end_row();
    }
}

void write_retweet_totals(std::ostream& out, const std::vector<RetweetTotals>& records) {
    out << kRetweetTotalsHeader << '\n';
    csv::Writer w(out);
    for (const auto& r : records) {
        w.field(r.month.to_string()).field(r.clinton_total).field(r.trump_total).end_row();
    }
}

void write_reddit_comments(std::ostream& out, const std::vector<RedditComment>& comments) {
    for (const auto& c : comments) {
        std::string body;
        for (const auto& d : c.domains) {
            if (!body.empty()) body += ' ';
            body += "https://" + d + "/";
        }
        nlohmann::ordered_json obj;
        obj["id"] = c.id;
        obj["parent_id"] = c.parent_id ? nlohmann::ordered_json(*c.parent_id) : nlohmann::ordered_json(nullptr);
        obj["author"] = c.author;
        obj["subreddit"] = c.subreddit;
        obj["created_utc"] = c.created_utc;
        obj["body"] = body;
        out << obj.dump() << '\n';
    }
}

void write_blacklist(std::ostream& out, const std::set<std::string>& domains) {
    for (const auto& d : domains) out << d << '\n';
}

}  // namespace invograph
