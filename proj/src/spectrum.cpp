#include "invograph/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "invograph/csv.hpp"
#include "invograph/error.hpp"

namespace invograph {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
               return std::tolower(x) == std::tolower(y);
           });
}

}  // namespace

const SpectrumPoint* Spectrum::find(std::string_view domain) const {
    auto it = points.find(domain);
    return it == points.end() ? nullptr : &it->second;
}

double Spectrum::score(std::string_view domain) const {
    const auto* p = find(domain);
    if (!p) throw PreconditionError("domain '" + std::string(domain) + "' has no spectrum score");
    return p->score;
}

double political_score(double p_c, double p_t) {
    if (!(p_c >= 0.0 && p_t >= 0.0) || p_c + p_t <= 0.0) {
        throw PreconditionError("political score needs non-negative probabilities with a positive sum");
    }
    return p_t / (p_c + p_t);
}

EngagementMap compute_engagement(std::span<const CoOccurrenceRecord> cooccur,
                                 std::span<const YearMonth> months) {
    const std::set<YearMonth> in_range(months.begin(), months.end());
    EngagementMap out;
    for (const auto& r : cooccur) {
        if (in_range.contains(r.month)) out[r.domain] += r.n_clinton + r.n_trump;
    }
    return out;
}

Spectrum compute_spectrum(std::span<const CoOccurrenceRecord> cooccur,
                          std::span<const RetweetTotals> totals,
                          std::span<const YearMonth> months) {
    if (months.empty()) throw PreconditionError("spectrum needs at least one month");
    const std::set<YearMonth> in_range(months.begin(), months.end());

    std::int64_t clinton_total = 0;
    std::int64_t trump_total = 0;
    for (const auto& m : in_range) {
        auto it = std::find_if(totals.begin(), totals.end(), [&](const RetweetTotals& t) { return t.month == m; });
        if (it == totals.end()) throw PreconditionError("no retweet totals for month " + m.to_string());
        if (it->clinton_total <= 0 || it->trump_total <= 0) {
            throw PreconditionError("zero retweet total for month " + m.to_string());
        }
        clinton_total += it->clinton_total;
        trump_total += it->trump_total;
    }

    std::map<std::string, std::pair<std::int64_t, std::int64_t>, std::less<>> counts;
    for (const auto& r : cooccur) {
        if (!in_range.contains(r.month)) continue;
        auto& c = counts[r.domain];
        c.first += r.n_clinton;
        c.second += r.n_trump;
    }

    Spectrum spectrum;
    spectrum.period.assign(in_range.begin(), in_range.end());
    for (const auto& [domain, c] : counts) {
        if (c.first + c.second == 0) continue;
        SpectrumPoint p;
        p.domain = domain;
        p.p_c = static_cast<double>(c.first) / static_cast<double>(clinton_total);
        p.p_t = static_cast<double>(c.second) / static_cast<double>(trump_total);
        p.score = political_score(p.p_c, p.p_t);
        spectrum.points.emplace(domain, std::move(p));
    }
    return spectrum;
}

Spectrum reddit_spectrum(std::span<const RedditComment> comments, std::string_view clinton_sub,
                         std::string_view trump_sub) {
    std::int64_t n_clinton = 0;
    std::int64_t n_trump = 0;
    std::map<std::string, std::pair<std::int64_t, std::int64_t>, std::less<>> counts;
    for (const auto& c : comments) {
        const bool in_c = iequals(c.subreddit, clinton_sub);
        const bool in_t = iequals(c.subreddit, trump_sub);
        if (in_c) ++n_clinton;
        if (in_t) ++n_trump;
        if (!in_c && !in_t) continue;
        for (const auto& d : c.domains) {
            auto& slot = counts[d];
            if (in_c) ++slot.first;
            if (in_t) ++slot.second;
        }
    }
    if (n_clinton == 0) throw PreconditionError("subreddit '" + std::string(clinton_sub) + "' has no comments");
    if (n_trump == 0) throw PreconditionError("subreddit '" + std::string(trump_sub) + "' has no comments");

    Spectrum spectrum;
    for (const auto& [domain, c] : counts) {
        SpectrumPoint p;
        p.domain = domain;
        p.p_c = static_cast<double>(c.first) / static_cast<double>(n_clinton);
        p.p_t = static_cast<double>(c.second) / static_cast<double>(n_trump);
        p.score = political_score(p.p_c, p.p_t);
        spectrum.points.emplace(domain, std::move(p));
    }
    return spectrum;
}

void write_spectrum(std::ostream& out, const Spectrum& spectrum) {
    csv::Writer w(out);
    w.header({"domain", "p_c", "p_t", "score"});
    for (const auto& [domain, p] : spectrum.points) w.field(domain).field(p.p_c).field(p.p_t).field(p.score).end_row();
}

Spectrum read_spectrum(std::istream& in) {
    csv::LineReader reader(in);
    csv::expect_header(reader, "domain,p_c,p_t,score");
    Spectrum spectrum;
    std::string line;
    while (reader.next(line)) {
        if (csv::trim(line).empty()) continue;
        const auto where = "line " + std::to_string(reader.line_number()) + ": ";
        const auto f = csv::split_fields(line);
        if (f.size() != 4) throw ParseError(where + "expected 4 fields");
        SpectrumPoint p;
        try {
            p.domain = std::string(csv::trim(f[0]));
            p.p_c = csv::parse_double(f[1], "p_c");
            p.p_t = csv::parse_double(f[2], "p_t");
            p.score = csv::parse_double(f[3], "score");
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        }
        if (p.domain.empty()) throw ParseError(where + "empty domain");
        if (p.p_c < 0.0 || p.p_t < 0.0 || p.p_c + p.p_t <= 0.0) {
            throw ParseError(where + "probabilities must be non-negative with a positive sum");
        }
        if (std::abs(p.score - political_score(p.p_c, p.p_t)) > 1e-9) {
            throw ParseError(where + "score does not equal p_t / (p_c + p_t)");
        }
        const auto key = p.domain;
        if (!spectrum.points.emplace(key, std::move(p)).second) {
            throw ParseError(where + "duplicate domain '" + key + "'");
        }
    }
    return spectrum;
}

std::vector<std::string> rank_by_score(const Spectrum& spectrum) {
    std::vector<std::string> domains;
    for (const auto& [domain, p] : spectrum.points) domains.push_back(domain);
    return rank_by_score(spectrum, domains);
}

std::vector<std::string> rank_by_score(const Spectrum& spectrum, std::span<const std::string> domains) {
    std::vector<std::pair<double, std::string>> scored;
    scored.reserve(domains.size());
    for (const auto& d : domains) scored.emplace_back(spectrum.score(d), d);
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t i = 1; i < scored.size(); ++i) {
        if (scored[i].first == scored[i - 1].first) {
            throw DegenerateDataError("tied scores for '" + scored[i - 1].second + "' and '" +
                                      scored[i].second + "'; ranking is ambiguous");
        }
    }
    std::vector<std::string> out;
    out.reserve(scored.size());
    for (auto& [score, domain] : scored) out.push_back(std::move(domain));
    return out;
}

InvocationGraph restrict_to_scored(const InvocationGraph& graph, const Spectrum& spectrum) {
    const auto& g = graph.graph;
    std::vector<std::string> nodes;
    std::vector<NodeId> remap(g.node_count(), 0);
    std::vector<char> keep(g.node_count(), 0);
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if (spectrum.find(g.name(i))) {
            keep[i] = 1;
            remap[i] = static_cast<NodeId>(nodes.size());
            nodes.push_back(g.name(i));
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (keep[e.src] && keep[e.dst]) edges.push_back({remap[e.src], remap[e.dst], e.weight});
    }
    return InvocationGraph{graph.month, Digraph::from_indexed(std::move(nodes), std::move(edges))};
}

}  // namespace invograph
