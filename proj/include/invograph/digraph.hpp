#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invograph {

using NodeId = std::uint32_t;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    std::int64_t weight = 0;

    auto operator<=>(const Edge&) const = default;
};

// Weighted directed graph over named nodes. Nodes are kept sorted by name and
// edges sorted by (src, dst) with one entry per ordered pair, so two graphs
// with the same content compare equal regardless of how they were built.
class Digraph {
public:
    Digraph() = default;

    // `nodes` must be sorted and unique; parallel edges are summed and
    // zero-weight edges dropped.
    static Digraph from_indexed(std::vector<std::string> nodes, std::vector<Edge> edges);

    std::span<const std::string> nodes() const { return nodes_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::string& name(NodeId id) const { return nodes_[id]; }

    std::optional<NodeId> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    // 0 when the edge is absent.
    std::int64_t weight(std::string_view src, std::string_view dst) const;

    std::int64_t total_weight() const;
    std::vector<std::int64_t> out_weights() const;
    std::vector<std::int64_t> in_weights() const;
    bool has_self_loops() const;

    bool operator==(const Digraph&) const = default;

private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
};

// Accumulates named edges; repeated (src, dst) pairs add up.
class DigraphBuilder {
public:
    void add_node(const std::string& name);
    void add_edge(const std::string& src, const std::string& dst, std::int64_t weight);
    Digraph build() const;

private:
    std::set<std::string> nodes_;
    std::map<std::pair<std::string, std::string>, std::int64_t> edges_;
};

}  // namespace invograph
