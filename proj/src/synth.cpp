#include "invograph/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "invograph/csv.hpp"
#include "invograph/domain.hpp"
#include "invograph/error.hpp"
#include "invograph/ingest.hpp"
#include "invograph/rng.hpp"

namespace invograph {

namespace {

constexpr std::int64_t kTotalUnit = 1'000'000;
constexpr const char* kHubDomain = "twitter.com";
constexpr const char* kLowEngagementDomain = "lowreach.net";

std::string outlet_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "outlet%04zu.com", i);
    return buf;
}

double lambda_for_month(const SynthConfig& cfg, std::size_t m) {
    if (!cfg.homophily_end || cfg.months.size() < 2) return cfg.homophily;
    const double t = static_cast<double>(m) / static_cast<double>(cfg.months.size() - 1);
    return cfg.homophily + t * (*cfg.homophily_end - cfg.homophily);
}

}  // namespace

SynthDataset generate(const SynthConfig& cfg) {
    if (cfg.n_domains < 3) throw PreconditionError("synth needs at least 3 domains");
    if (cfg.n_domains >= static_cast<std::size_t>(kScoreDenominator)) {
        throw PreconditionError("synth supports fewer than " + std::to_string(kScoreDenominator) + " domains");
    }
    if (cfg.volume < 1) throw PreconditionError("synth volume must be at least 1");
    if (!(cfg.right_bias >= 0.0)) throw PreconditionError("right_bias must be non-negative");
    if (cfg.months.empty()) throw PreconditionError("synth needs at least one month");

    const std::string seed_domain = normalize_domain(cfg.seed_domain);
    Rng rng(cfg.rng_seed);
    const std::size_t n = cfg.n_domains;

    std::vector<std::string> names;
    names.reserve(n);
    names.push_back(seed_domain);
    for (std::size_t i = 1; names.size() < n; ++i) {
        auto name = outlet_name(i);
        if (name != seed_domain) names.push_back(std::move(name));
    }

    // Distinct numerators k, score k / kScoreDenominator.
    std::vector<std::int64_t> numer;
    std::set<std::int64_t> used;
    while (numer.size() < n) {
        const auto k = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(kScoreDenominator - 1)));
        if (used.insert(k).second) numer.push_back(k);
    }
    std::vector<double> score(n);
    std::vector<std::int64_t> gain(n);
    for (std::size_t i = 0; i < n; ++i) {
        score[i] = static_cast<double>(numer[i]) / static_cast<double>(kScoreDenominator);
        gain[i] = 1 + static_cast<std::int64_t>(rng.below(3));
    }

    SynthDataset data;
    data.seed_domain = seed_domain;
    data.blacklist = default_blacklist();
    for (std::size_t i = 0; i < n; ++i) data.ground_truth.emplace(names[i], score[i]);

    for (std::size_t m = 0; m < cfg.months.size(); ++m) {
        const YearMonth month = cfg.months[m];
        const std::int64_t c_m = 1 + static_cast<std::int64_t>(rng.below(4));
        const std::int64_t t_m = 1 + static_cast<std::int64_t>(rng.below(4));
        data.totals.push_back({month, c_m * kTotalUnit, t_m * kTotalUnit});
        // n_c / C : n_t / T = (Q - k) : k, so the pooled score is exactly k / Q.
        for (std::size_t i = 0; i < n; ++i) {
            data.cooccurrence.push_back(
                {month, names[i], (kScoreDenominator - numer[i]) * c_m * gain[i], numer[i] * t_m * gain[i]});
        }

        const double lambda = lambda_for_month(cfg, m);
        std::vector<double> kernel(n * n, 0.0);
        double kernel_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                double k = std::exp(-lambda * std::abs(score[i] - score[j]));
                if (score[i] > 0.5 && score[j] < 0.5) k *= cfg.right_bias;
                kernel[i * n + j] = k;
                kernel_sum += k;
            }
        }
        const double kernel_mean = kernel_sum / static_cast<double>(n * (n - 1));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const double rate =
                    kernel_mean > 0.0 ? static_cast<double>(cfg.volume) * kernel[i * n + j] / kernel_mean : 0.0;
                std::int64_t w = rng.poisson(rate);
                if (rate >= 1.0) w = std::max<std::int64_t>(w, 1);
                if (w > 0) data.reply_pairs.push_back({month, names[i], names[j], w});
            }
        }

        if (cfg.include_noise) {
            data.cooccurrence.push_back({month, kHubDomain, 5 * kScoreDenominator, 5 * kScoreDenominator});
            data.cooccurrence.push_back({month, kLowEngagementDomain, 20, 30});
            for (std::size_t i = 0; i < n; ++i) {
                data.reply_pairs.push_back({month, kHubDomain, names[i], 2 * cfg.volume});
                data.reply_pairs.push_back({month, names[i], kHubDomain, 2 * cfg.volume});
            }
            data.reply_pairs.push_back({month, kLowEngagementDomain, seed_domain, 3 * cfg.volume});
            data.reply_pairs.push_back({month, seed_domain, kLowEngagementDomain, 3 * cfg.volume});
            for (std::size_t i = 0; i < std::min<std::size_t>(n, 5); ++i) {
                data.reply_pairs.push_back({month, names[i], names[i], 5 * cfg.volume});
            }
        }
    }
    std::sort(data.reply_pairs.begin(), data.reply_pairs.end());
    std::sort(data.cooccurrence.begin(), data.cooccurrence.end());
    return data;
}

std::vector<RedditComment> generate_comments(const CommentSynthConfig& cfg) {
    if (cfg.days < 1 || cfg.comments_per_day < 1) throw PreconditionError("comment synth needs days and comments");
    if (cfg.clinton_users == 0 || cfg.trump_users == 0) {
        throw PreconditionError("comment synth needs users on both sides");
    }
    Rng rng(cfg.rng_seed);

    enum Group { c, t, b, o };
    struct User {
        std::string name;
        Group group;
    };
    std::vector<User> users;
    auto add_group = [&](std::size_t count, Group g, const char* prefix) {
        for (std::size_t i = 0; i < count; ++i) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%s%04zu", prefix, i);
            users.push_back({buf, g});
        }
    };
    add_group(cfg.clinton_users, c, "c_");
    add_group(cfg.trump_users, t, "t_");
    add_group(cfg.both_users, b, "b_");
    add_group(cfg.other_users, o, "o_");

    std::vector<std::string> domain_names;
    std::vector<double> w_clinton, w_trump;
    double sum_c = 0.0, sum_t = 0.0;
    for (const auto& [domain, s] : cfg.domain_scores) {
        domain_names.push_back(domain);
        w_clinton.push_back(1.0 - s);
        w_trump.push_back(s);
        sum_c += 1.0 - s;
        sum_t += s;
    }
    auto pick_weighted = [&](const std::vector<double>& w, double total) -> const std::string& {
        double x = rng.uniform01() * total;
        for (std::size_t i = 0; i < w.size(); ++i) {
            x -= w[i];
            if (x < 0.0) return domain_names[i];
        }
        return domain_names.back();
    };

    std::vector<RedditComment> out;
    std::size_t next_id = 0;
    auto new_id = [&] {
        static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
        std::string id;
        std::size_t v = next_id++;
        do {
            id.insert(id.begin(), digits[v % 36]);
            v /= 36;
        } while (v > 0);
        return "k" + id;
    };
    const std::int64_t day_seconds = 86400;
    auto random_time = [&] {
        const auto day = cfg.start_day + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cfg.days)));
        return day * day_seconds + static_cast<std::int64_t>(rng.below(day_seconds));
    };

    auto anchor_post = [&](const User& u, const std::string& sub, bool trump_side) {
        RedditComment post;
        post.id = new_id();
        post.author = u.name;
        post.subreddit = sub;
        post.created_utc = random_time();
        if (!domain_names.empty()) {
            post.domains.insert(trump_side ? pick_weighted(w_trump, sum_t) : pick_weighted(w_clinton, sum_c));
        }
        out.push_back(std::move(post));
    };
    for (const auto& u : users) {
        for (int k = 0; k < cfg.anchor_posts_per_user; ++k) {
            if (u.group == c || u.group == b) anchor_post(u, cfg.clinton_sub, false);
            if (u.group == t || u.group == b) anchor_post(u, cfg.trump_sub, true);
        }
    }

    // Forum thread: indices into `out` of earlier forum comments, by author side.
    std::vector<std::size_t> by_c, by_t, any;
    const std::int64_t per_day = cfg.comments_per_day;
    for (int d = 0; d < cfg.days; ++d) {
        const double frac = cfg.days > 1 ? static_cast<double>(d) / static_cast<double>(cfg.days - 1) : 0.0;
        const double cross = cfg.cross_share_start + frac * (cfg.cross_share_end - cfg.cross_share_start);
        for (std::int64_t k = 0; k < per_day; ++k) {
            const auto& u = users[static_cast<std::size_t>(rng.below(users.size()))];
            RedditComment cm;
            cm.id = new_id();
            cm.author = u.name;
            cm.subreddit = cfg.forum;
            cm.created_utc = (cfg.start_day + d) * day_seconds + k * day_seconds / per_day;
            const bool top_level = any.empty() || rng.uniform01() < 0.1;
            if (!top_level) {
                const std::vector<std::size_t>* pool = &any;
                if ((u.group == c || u.group == t) && !by_c.empty() && !by_t.empty()) {
                    const bool to_other = rng.uniform01() < cross;
                    const bool target_t = (u.group == c) == to_other;
                    pool = target_t ? &by_t : &by_c;
                }
                const auto parent = (*pool)[static_cast<std::size_t>(rng.below(pool->size()))];
                cm.parent_id = "t1_" + out[parent].id;
            }
            if (u.group == c) by_c.push_back(out.size());
            if (u.group == t) by_t.push_back(out.size());
            any.push_back(out.size());
            out.push_back(std::move(cm));
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const RedditComment& a, const RedditComment& b) { return a.created_utc < b.created_utc; });
    return out;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path.string() + "' for writing");
    return f;
}

}  // namespace

SynthFiles write_synth_files(const std::filesystem::path& dir, const SynthDataset& data,
                             const std::vector<RedditComment>* comments) {
    std::filesystem::create_directories(dir);
    SynthFiles files;
    auto emit = [&](const char* name, auto&& writer) {
        auto f = open_for_write(dir / name);
        writer(f);
        if (!f) throw Error("write failed for '" + (dir / name).string() + "'");
        files.written.emplace_back(name);
    };
    emit("reply_pairs.csv", [&](std::ostream& f) { write_reply_pairs(f, data.reply_pairs); });
    emit("cooccur.csv", [&](std::ostream& f) { write_cooccurrence(f, data.cooccurrence); });
    emit("retweets.csv", [&](std::ostream& f) { write_retweet_totals(f, data.totals); });
    emit("ground_truth.csv", [&](std::ostream& f) {
        csv::Writer w(f);
        w.header({"domain", "score"});
        for (const auto& [domain, s] : data.ground_truth) {
            w.field(domain).field(s);
            w.end_row();
        }
    });
    emit("blacklist.txt", [&](std::ostream& f) { write_blacklist(f, data.blacklist); });
    if (comments) emit("comments.jsonl", [&](std::ostream& f) { write_reddit_comments(f, *comments); });
    return files;
}

}  // namespace invograph
