#include "invograph/user_level.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string_view>
#include <unordered_map>

#include "invograph/error.hpp"
#include "invograph/month.hpp"
#include "invograph/rng.hpp"
#include "invograph/stats.hpp"

namespace invograph {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](unsigned char x, unsigned char y) {
        return std::tolower(x) == std::tolower(y);
    });
}

bool classifiable(std::string_view author) { return !author.empty() && author != "[deleted]"; }

std::string_view strip_kind_prefix(std::string_view id) {
    if (id.size() > 3 && id[0] == 't' && (id[1] == '1' || id[1] == '3') && id[2] == '_') id.remove_prefix(3);
    return id;
}

struct ReplyLink {
    std::size_t child = 0;
    std::size_t parent = 0;
    std::int64_t day = 0;
};

std::vector<ReplyLink> reply_links(std::span<const RedditComment> comments, const WindowConfig& cfg) {
    std::unordered_map<std::string_view, std::size_t> by_id;
    by_id.reserve(comments.size());
    for (std::size_t i = 0; i < comments.size(); ++i) by_id.emplace(strip_kind_prefix(comments[i].id), i);
    std::vector<ReplyLink> links;
    for (std::size_t i = 0; i < comments.size(); ++i) {
        const auto& c = comments[i];
        if (!c.parent_id) continue;
        if (!cfg.forum.empty() && !iequals(c.subreddit, cfg.forum)) continue;
        auto it = by_id.find(strip_kind_prefix(*c.parent_id));
        if (it == by_id.end() || it->second == i) continue;
        links.push_back({i, it->second, unix_day(c.created_utc)});
    }
    return links;
}

enum Side : int { none = -1, clinton = 0, trump = 1 };

Side side_of(const UserSets& users, std::string_view author) {
    if (users.clinton.find(author) != users.clinton.end()) return clinton;
    if (users.trump.find(author) != users.trump.end()) return trump;
    return none;
}

void check_config(const WindowConfig& cfg) {
    if (cfg.window_days < 1) throw PreconditionError("window length must be at least one day");
    if (cfg.step_days < 1) throw PreconditionError("window step must be at least one day");
}

// author_of(i) names the author of comment i, possibly after a shuffle.
template <class AuthorOf>
std::vector<InteractionWindow> count_windows(const std::vector<ReplyLink>& links, AuthorOf author_of,
                                             const UserSets& users, const WindowConfig& cfg) {
    struct Event {
        std::int64_t day;
        int type;  // 2 * side(child) + side(parent)
    };
    std::vector<Event> events;
    events.reserve(links.size());
    for (const auto& l : links) {
        const std::string_view child = author_of(l.child);
        const std::string_view parent = author_of(l.parent);
        if (cfg.exclude_self_replies && child == parent) continue;
        const Side p = side_of(users, child);
        if (p == none) continue;
        const Side q = side_of(users, parent);
        if (q == none) continue;
        events.push_back({l.day, 2 * p + q});
    }
    if (events.empty()) throw DegenerateDataError("no reply pair with both authors classified");

    std::int64_t first = events.front().day, last = first;
    for (const auto& e : events) {
        first = std::min(first, e.day);
        last = std::max(last, e.day);
    }
    const auto span_days = static_cast<std::size_t>(last - first + 1);
    // prefix[k][d]: events of type k on days first .. first + d - 1.
    std::array<std::vector<std::int64_t>, 4> prefix;
    for (auto& p : prefix) p.assign(span_days + 1, 0);
    for (const auto& e : events) ++prefix[static_cast<std::size_t>(e.type)][static_cast<std::size_t>(e.day - first) + 1];
    for (auto& p : prefix) {
        for (std::size_t d = 1; d <= span_days; ++d) p[d] += p[d - 1];
    }
    auto count_up_to = [&](int type, std::int64_t day) -> std::int64_t {
        if (day < first) return 0;
        const auto idx = static_cast<std::size_t>(std::min(day, last) - first) + 1;
        return prefix[static_cast<std::size_t>(type)][idx];
    };

    std::vector<InteractionWindow> windows;
    const std::int64_t end_last = last + cfg.window_days - 1;
    for (std::int64_t end = first; end <= end_last; end += cfg.step_days) {
        const std::int64_t start = end - cfg.window_days + 1;
        std::array<std::int64_t, 4> n{};
        for (int k = 0; k < 4; ++k) n[static_cast<std::size_t>(k)] = count_up_to(k, end) - count_up_to(k, start - 1);
        windows.push_back({end, n[0], n[1], n[2], n[3]});
    }
    return windows;
}

}  // namespace

UserSets classify_users(std::span<const RedditComment> comments, std::string_view clinton_sub,
                        std::string_view trump_sub) {
    std::set<std::string, std::less<>> in_c, in_t;
    for (const auto& c : comments) {
        if (!classifiable(c.author)) continue;
        if (iequals(c.subreddit, clinton_sub)) in_c.insert(c.author);
        if (iequals(c.subreddit, trump_sub)) in_t.insert(c.author);
    }
    UserSets users;
    std::set_difference(in_c.begin(), in_c.end(), in_t.begin(), in_t.end(),
                        std::inserter(users.clinton, users.clinton.end()), std::less<>{});
    std::set_difference(in_t.begin(), in_t.end(), in_c.begin(), in_c.end(),
                        std::inserter(users.trump, users.trump.end()), std::less<>{});
    return users;
}

std::vector<InteractionWindow> interaction_windows(std::span<const RedditComment> comments, const UserSets& users,
                                                   const WindowConfig& cfg) {
    check_config(cfg);
    const auto links = reply_links(comments, cfg);
    return count_windows(
        links, [&](std::size_t i) -> std::string_view { return comments[i].author; }, users, cfg);
}

std::vector<RatioPoint> cross_cutting_ratio(std::span<const InteractionWindow> windows) {
    std::vector<RatioPoint> series;
    for (const auto& w : windows) {
        const auto cross = w.n_ct + w.n_tc;
        if (cross == 0) continue;
        series.push_back({w.end_day, static_cast<double>(w.n_cc + w.n_tt) / static_cast<double>(cross)});
    }
    return series;
}

double ratio_slope(std::span<const RatioPoint> series) {
    std::vector<double> x, y;
    x.reserve(series.size());
    y.reserve(series.size());
    for (const auto& p : series) {
        x.push_back(static_cast<double>(p.end_day));
        y.push_back(p.ratio);
    }
    return ols(x, y).slope;
}

TrendSignificance trend_significance(std::span<const RatioPoint> series, std::span<const RedditComment> comments,
                                     const UserSets& users, const WindowConfig& cfg, ShuffleScope scope,
                                     std::size_t trials, std::uint64_t rng_seed) {
    if (series.size() < 2) throw DegenerateDataError("ratio series needs at least two windows");
    if (trials == 0) throw PreconditionError("trend significance needs at least one trial");
    check_config(cfg);
    TrendSignificance out;
    out.observed_slope = ratio_slope(series);
    const auto links = reply_links(comments, cfg);
    out.null_slopes.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto shuffled = shuffle_users(comments, scope, derive_seed(rng_seed, t));
        const auto windows = count_windows(
            links, [&](std::size_t i) -> std::string_view { return shuffled[i].author; }, users, cfg);
        out.null_slopes.push_back(ratio_slope(cross_cutting_ratio(windows)));
    }
    out.min_null_slope = *std::min_element(out.null_slopes.begin(), out.null_slopes.end());
    out.significant = out.observed_slope < out.min_null_slope;
    return out;
}

}  // namespace invograph
