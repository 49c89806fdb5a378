#include "invograph/graphbuild.hpp"

#include <deque>
#include <istream>
#include <ostream>

#include "invograph/csv.hpp"
#include "invograph/error.hpp"
#include "json.hpp"

namespace invograph {

Digraph aggregate_raw_graph(std::span<const ReplyPairRecord> records, YearMonth month) {
    DigraphBuilder builder;
    for (const auto& r : records) {
        if (r.month == month) builder.add_edge(r.src_domain, r.dst_domain, r.count);
    }
    return builder.build();
}

InvocationGraph build_invocation_graph(const Digraph& raw, YearMonth month,
                                       const EngagementMap& engagement, const BuildConfig& cfg) {
    if (cfg.edge_threshold < 1) throw PreconditionError("edge threshold W must be at least 1");
    if (cfg.engagement_threshold < 0) throw PreconditionError("engagement threshold p must be non-negative");

    auto engagement_of = [&](std::string_view domain) -> std::int64_t {
        auto it = engagement.find(domain);
        return it == engagement.end() ? 0 : it->second;
    };

    const auto& seed = cfg.seed_domain;
    const auto where = " (month " + month.to_string() + ")";
    const auto seed_id = raw.index_of(seed);
    if (!seed_id) throw PreconditionError("seed domain '" + seed + "' is absent from the raw graph" + where);
    if (cfg.blacklist.contains(seed)) throw PreconditionError("seed domain '" + seed + "' is blacklisted");
    if (engagement_of(seed) < cfg.engagement_threshold) {
        throw PreconditionError("seed domain '" + seed + "' has engagement " +
                                std::to_string(engagement_of(seed)) + " below threshold " +
                                std::to_string(cfg.engagement_threshold) + where);
    }

    const auto n = raw.node_count();
    std::vector<char> kept(n, 0);
    for (NodeId i = 0; i < n; ++i) {
        const auto& name = raw.name(i);
        kept[i] = !cfg.blacklist.contains(name) && engagement_of(name) >= cfg.engagement_threshold;
    }

    // Undirected adjacency over surviving heavy edges. Edges are sorted, so
    // each neighbour list comes out in a fixed order.
    std::vector<std::vector<NodeId>> heavy(n);
    for (const auto& e : raw.edges()) {
        if (e.src == e.dst || !kept[e.src] || !kept[e.dst] || e.weight < cfg.edge_threshold) continue;
        heavy[e.src].push_back(e.dst);
        heavy[e.dst].push_back(e.src);
    }

    std::vector<char> reached(n, 0);
    std::deque<NodeId> queue{*seed_id};
    reached[*seed_id] = 1;
    std::size_t reached_count = 1;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto v : heavy[u]) {
            if (!reached[v]) {
                reached[v] = 1;
                ++reached_count;
                queue.push_back(v);
            }
        }
    }
    if (reached_count < 2) {
        throw DegenerateDataError("seed domain '" + seed + "' has no edge of weight >= " +
                                  std::to_string(cfg.edge_threshold) + " after filtering" + where);
    }

    std::vector<std::string> nodes;
    std::vector<NodeId> remap(n, 0);
    for (NodeId i = 0; i < n; ++i) {
        if (reached[i]) {
            remap[i] = static_cast<NodeId>(nodes.size());
            nodes.push_back(raw.name(i));
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : raw.edges()) {
        if (e.src != e.dst && reached[e.src] && reached[e.dst]) {
            edges.push_back({remap[e.src], remap[e.dst], e.weight});
        }
    }
    return InvocationGraph{month, Digraph::from_indexed(std::move(nodes), std::move(edges))};
}

void write_graph_edges(std::ostream& out, const InvocationGraph& graph) {
    csv::Writer w(out);
    w.header({"src", "dst", "weight"});
    const auto& g = graph.graph;
    for (const auto& e : g.edges()) w.field(g.name(e.src)).field(g.name(e.dst)).field(e.weight).end_row();
}

std::string graph_sidecar_json(const InvocationGraph& graph, const BuildConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["month"] = graph.month.to_string();
    doc["config"] = {
        {"engagement_threshold", cfg.engagement_threshold},
        {"edge_threshold", cfg.edge_threshold},
        {"seed_domain", cfg.seed_domain},
        {"blacklist", std::vector<std::string>(cfg.blacklist.begin(), cfg.blacklist.end())},
    };
    doc["nodes"] = std::vector<std::string>(graph.graph.nodes().begin(), graph.graph.nodes().end());
    return doc.dump(2) + "\n";
}

InvocationGraph read_graph(std::istream& edges_csv, std::istream& sidecar_json) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(sidecar_json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph sidecar: ") + e.what());
    }
    if (!doc.contains("month") || !doc["month"].is_string() || !doc.contains("nodes") ||
        !doc["nodes"].is_array()) {
        throw ParseError("graph sidecar: expected string 'month' and array 'nodes'");
    }
    InvocationGraph graph;
    graph.month = YearMonth::parse(doc["month"].get<std::string>());

    DigraphBuilder builder;
    std::set<std::string, std::less<>> nodes;
    for (const auto& node : doc["nodes"]) {
        if (!node.is_string()) throw ParseError("graph sidecar: node names must be strings");
        nodes.insert(node.get<std::string>());
        builder.add_node(node.get<std::string>());
    }

    csv::LineReader reader(edges_csv);
    csv::expect_header(reader, "src,dst,weight");
    std::string line;
    while (reader.next(line)) {
        if (csv::trim(line).empty()) continue;
        const auto where = "line " + std::to_string(reader.line_number()) + ": ";
        const auto f = csv::split_fields(line);
        if (f.size() != 3) throw ParseError(where + "expected 3 fields");
        const std::string src(csv::trim(f[0]));
        const std::string dst(csv::trim(f[1]));
        if (!nodes.contains(src) || !nodes.contains(dst)) {
            throw ParseError(where + "edge endpoint missing from the sidecar node list");
        }
        std::int64_t weight = 0;
        try {
            weight = csv::parse_int(f[2], "weight");
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        }
        if (weight <= 0) throw ParseError(where + "weight must be positive");
        builder.add_edge(src, dst, weight);
    }
    graph.graph = builder.build();
    return graph;
}

}  // namespace invograph
