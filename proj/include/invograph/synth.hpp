#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invograph/month.hpp"
#include "invograph/records.hpp"

namespace invograph {

// Planted-structure generator for reply pairs and co-occurrence data.
//
// Domain scores are drawn as distinct multiples of 1/kScoreDenominator inside
// (0, 1). The weight of edge i -> j in a month is Poisson with mean
//
//     volume * k(i, j) / mean(k),   k(i, j) = exp(-lambda |s_i - s_j|) * bias(i, j)
//
// where bias is right_bias for edges from s > 0.5 to s < 0.5 and 1 otherwise.
// Pairs whose mean is at least 1 always get weight >= 1. Lambda can move
// linearly from `homophily` in the first month to `homophily_end` in the last.
struct SynthConfig {
    std::size_t n_domains = 40;
    double homophily = 0.0;
    std::optional<double> homophily_end;
    double right_bias = 1.0;
    std::int64_t volume = 100;
    std::vector<YearMonth> months{YearMonth{2016, 1}};
    std::uint64_t rng_seed = 1;
    std::string seed_domain = "nytimes.com";
    // Adds a blacklisted hub, a low-engagement domain and heavy self-loops, so
    // the graph filters have something to remove.
    bool include_noise = true;
};

inline constexpr std::int64_t kScoreDenominator = 10000;

struct SynthDataset {
    std::vector<ReplyPairRecord> reply_pairs;
    std::vector<CoOccurrenceRecord> cooccurrence;
    std::vector<RetweetTotals> totals;
    std::map<std::string, double> ground_truth;  // planted scores, planted domains only
    std::set<std::string> blacklist;
    std::string seed_domain;
};

// Throws PreconditionError for n_domains < 3, n_domains >= kScoreDenominator,
// volume < 1, negative right_bias or an empty month list.
SynthDataset generate(const SynthConfig& cfg);

// Reddit-style comments for the user-level analysis. Users are split into
// Clinton-only, Trump-only, both-anchor and unaffiliated groups; each
// affiliated user posts top-level comments in their anchor subreddit(s). In
// the forum, the share of classified replies aimed at the other side rises
// linearly from cross_share_start on the first day to cross_share_end on the
// last.
struct CommentSynthConfig {
    std::size_t clinton_users = 150;
    std::size_t trump_users = 450;
    std::size_t both_users = 20;
    std::size_t other_users = 200;
    std::string clinton_sub = "hillaryclinton";
    std::string trump_sub = "The_Donald";
    std::string forum = "politics";
    std::int64_t start_day = 16801;  // 2016-01-01
    int days = 300;
    int comments_per_day = 60;
    double cross_share_start = 0.15;
    double cross_share_end = 0.45;
    int anchor_posts_per_user = 2;
    // When non-empty, anchor posts link to these domains, Clinton-sub posts
    // favouring low scores and Trump-sub posts high scores.
    std::map<std::string, double> domain_scores;
    std::uint64_t rng_seed = 1;
};

std::vector<RedditComment> generate_comments(const CommentSynthConfig& cfg);

// Files written by write_synth_files, relative to the output directory.
struct SynthFiles {
    std::vector<std::filesystem::path> written;
};

// reply_pairs.csv, cooccur.csv, retweets.csv, ground_truth.csv, blacklist.txt
// and, when comments are given, comments.jsonl.
SynthFiles write_synth_files(const std::filesystem::path& dir, const SynthDataset& data,
                             const std::vector<RedditComment>* comments);

}  // namespace invograph
