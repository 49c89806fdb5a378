#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invograph/graphbuild.hpp"
#include "invograph/month.hpp"
#include "invograph/records.hpp"

namespace invograph {

// A domain's co-occurrence coordinates and its scalar position, 0 at the
// Clinton end and 1 at the Trump end.
struct SpectrumPoint {
    std::string domain;
    double p_c = 0.0;
    double p_t = 0.0;
    double score = 0.0;

    bool operator==(const SpectrumPoint&) const = default;
};

struct Spectrum {
    std::vector<YearMonth> period;
    std::map<std::string, SpectrumPoint, std::less<>> points;

    const SpectrumPoint* find(std::string_view domain) const;
    double score(std::string_view domain) const;  // throws PreconditionError if absent

    bool operator==(const Spectrum&) const = default;
};

// p_t / (p_c + p_t). Requires p_c + p_t > 0.
double political_score(double p_c, double p_t);

EngagementMap compute_engagement(std::span<const CoOccurrenceRecord> cooccur,
                                 std::span<const YearMonth> months);

// Pools numerators and denominators over `months` (ratio of sums). Domains
// with no co-occurrence in the period are left out. Throws PreconditionError
// naming the month when a total is missing or zero.
Spectrum compute_spectrum(std::span<const CoOccurrenceRecord> cooccur,
                          std::span<const RetweetTotals> totals,
                          std::span<const YearMonth> months);

// Per-comment probabilities: the share of comments in each anchor subreddit
// that link at least once to the domain. Subreddit names match
// case-insensitively. Throws PreconditionError if either anchor is empty.
Spectrum reddit_spectrum(std::span<const RedditComment> comments,
                         std::string_view clinton_sub, std::string_view trump_sub);

// CSV `domain,p_c,p_t,score`.
void write_spectrum(std::ostream& out, const Spectrum& spectrum);
Spectrum read_spectrum(std::istream& in);

// Domains ordered from the Trump end (highest score) to the Clinton end,
// restricted to `domains` when given. Equal scores throw DegenerateDataError.
std::vector<std::string> rank_by_score(const Spectrum& spectrum);
std::vector<std::string> rank_by_score(const Spectrum& spectrum,
                                       std::span<const std::string> domains);

// Copy of `graph` without nodes the spectrum does not score.
InvocationGraph restrict_to_scored(const InvocationGraph& graph, const Spectrum& spectrum);

}  // namespace invograph
