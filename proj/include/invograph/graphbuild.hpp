#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>

#include "invograph/digraph.hpp"
#include "invograph/ingest.hpp"
#include "invograph/month.hpp"
#include "invograph/records.hpp"

namespace invograph {

using EngagementMap = std::map<std::string, std::int64_t, std::less<>>;

struct BuildConfig {
    std::int64_t engagement_threshold = 10000;  // p
    std::int64_t edge_threshold = 100;          // W
    std::string seed_domain = "nytimes.com";
    std::set<std::string> blacklist = default_blacklist();
};

// The filtered monthly graph G^m: no self-loops, connected when read as
// undirected, every node reachable from the seed over edges of weight >= W.
struct InvocationGraph {
    YearMonth month;
    Digraph graph;

    bool operator==(const InvocationGraph&) const = default;
};

// Sums the month's reply pairs into a raw digraph. Self-loops stay.
Digraph aggregate_raw_graph(std::span<const ReplyPairRecord> records, YearMonth month);

// Filters in this order: blacklist, engagement < p, self-loops, then an
// undirected BFS from the seed over edges of weight >= W. Every remaining
// edge between reached nodes is kept, including those lighter than W.
// Domains missing from `engagement` count as 0.
//
// Throws PreconditionError when the seed is absent, blacklisted or below the
// engagement threshold, and DegenerateDataError when the seed has no edge of
// weight >= W left.
InvocationGraph build_invocation_graph(const Digraph& raw, YearMonth month,
                                       const EngagementMap& engagement, const BuildConfig& cfg);

// Edge list CSV `src,dst,weight`, sorted by (src, dst).
void write_graph_edges(std::ostream& out, const InvocationGraph& graph);

// JSON sidecar {month, config, nodes}.
std::string graph_sidecar_json(const InvocationGraph& graph, const BuildConfig& cfg);

// Inverse of the two writers above. Nodes listed only in the sidecar are kept.
InvocationGraph read_graph(std::istream& edges_csv, std::istream& sidecar_json);

}  // namespace invograph
