#include "invograph/digraph.hpp"

#include <algorithm>
#include <tuple>

#include "invograph/error.hpp"

namespace invograph {

Digraph Digraph::from_indexed(std::vector<std::string> nodes, std::vector<Edge> edges) {
    Digraph g;
    g.nodes_ = std::move(nodes);
    for (std::size_t i = 1; i < g.nodes_.size(); ++i) {
        if (!(g.nodes_[i - 1] < g.nodes_[i])) {
            throw PreconditionError("digraph nodes must be sorted and unique");
        }
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
        if (e.src >= g.nodes_.size() || e.dst >= g.nodes_.size()) {
            throw PreconditionError("edge endpoint out of range");
        }
        if (e.weight < 0) throw PreconditionError("negative edge weight");
        if (e.weight == 0) continue;
        if (!g.edges_.empty() && g.edges_.back().src == e.src && g.edges_.back().dst == e.dst) {
            g.edges_.back().weight += e.weight;
        } else {
            g.edges_.push_back(e);
        }
    }
    return g;
}

std::optional<NodeId> Digraph::index_of(std::string_view name) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == nodes_.end() || *it != name) return std::nullopt;
    return static_cast<NodeId>(it - nodes_.begin());
}

std::int64_t Digraph::weight(std::string_view src, std::string_view dst) const {
    const auto s = index_of(src);
    const auto d = index_of(dst);
    if (!s || !d) return 0;
    const Edge key{*s, *d, 0};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& a, const Edge& b) {
        return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
    });
    return (it != edges_.end() && it->src == *s && it->dst == *d) ? it->weight : 0;
}

std::int64_t Digraph::total_weight() const {
    std::int64_t total = 0;
    for (const auto& e : edges_) total += e.weight;
    return total;
}

std::vector<std::int64_t> Digraph::out_weights() const {
    std::vector<std::int64_t> out(nodes_.size(), 0);
    for (const auto& e : edges_) out[e.src] += e.weight;
    return out;
}

std::vector<std::int64_t> Digraph::in_weights() const {
    std::vector<std::int64_t> in(nodes_.size(), 0);
    for (const auto& e : edges_) in[e.dst] += e.weight;
    return in;
}

bool Digraph::has_self_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.src == e.dst; });
}

void DigraphBuilder::add_node(const std::string& name) { nodes_.insert(name); }

void DigraphBuilder::add_edge(const std::string& src, const std::string& dst, std::int64_t weight) {
    if (weight <= 0) throw PreconditionError("edge weight must be positive");
    nodes_.insert(src);
    nodes_.insert(dst);
    edges_[{src, dst}] += weight;
}

Digraph DigraphBuilder::build() const {
    std::vector<std::string> nodes(nodes_.begin(), nodes_.end());
    std::map<std::string_view, NodeId> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], static_cast<NodeId>(i));
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& [key, w] : edges_) edges.push_back({index.at(key.first), index.at(key.second), w});
    return Digraph::from_indexed(std::move(nodes), std::move(edges));
}

}  // namespace invograph
