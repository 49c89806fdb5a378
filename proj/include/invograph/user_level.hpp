#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invograph/null_models.hpp"
#include "invograph/records.hpp"

namespace invograph {

// Users who posted in exactly one of the two anchor subreddits.
struct UserSets {
    std::set<std::string, std::less<>> clinton;
    std::set<std::string, std::less<>> trump;
};

// Deleted accounts ("[deleted]") and empty author names are never classified.
UserSets classify_users(std::span<const RedditComment> comments, std::string_view clinton_sub,
                        std::string_view trump_sub);

struct WindowConfig {
    std::string forum;  // subreddit whose replies are counted; empty = all
    int window_days = 30;
    int step_days = 1;
    bool exclude_self_replies = false;
};

// Reply counts n_{P->Q} (a P-user replying to a Q-user) over the window of
// `window_days` days ending at `end_day` (days since 1970-01-01).
struct InteractionWindow {
    std::int64_t end_day = 0;
    std::int64_t n_cc = 0;
    std::int64_t n_ct = 0;
    std::int64_t n_tc = 0;
    std::int64_t n_tt = 0;

    std::int64_t total() const { return n_cc + n_ct + n_tc + n_tt; }
    bool operator==(const InteractionWindow&) const = default;
};

// Window end dates run from the first classified reply's day to the last
// one's day + window_days - 1, stepping by step_days. Parents are looked up by
// id among all `comments` (a "t1_"/"t3_" prefix on parent_id is tolerated);
// replies to missing parents and pairs with an unclassified side are skipped.
// Throws DegenerateDataError when no classified reply pair exists.
std::vector<InteractionWindow> interaction_windows(std::span<const RedditComment> comments,
                                                   const UserSets& users, const WindowConfig& cfg);

struct RatioPoint {
    std::int64_t end_day = 0;
    double ratio = 0.0;
};

// (n_cc + n_tt) / (n_ct + n_tc); windows without cross-type replies are omitted.
std::vector<RatioPoint> cross_cutting_ratio(std::span<const InteractionWindow> windows);

// OLS slope of ratio against end day (per day).
double ratio_slope(std::span<const RatioPoint> series);

struct TrendSignificance {
    double observed_slope = 0.0;
    std::vector<double> null_slopes;
    double min_null_slope = 0.0;
    bool significant = false;  // observed slope below every null slope
};

// Null slopes come from shuffle_users over `comments` followed by the same
// window counting with the user sets held fixed. Trial t uses
// derive_seed(rng_seed, t). Throws DegenerateDataError when `series` has
// fewer than two points.
TrendSignificance trend_significance(std::span<const RatioPoint> series,
                                     std::span<const RedditComment> comments,
                                     const UserSets& users, const WindowConfig& cfg,
                                     ShuffleScope scope, std::size_t trials,
                                     std::uint64_t rng_seed);

}  // namespace invograph
