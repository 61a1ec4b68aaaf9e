#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace wssim {

using NodeIndex = std::size_t;

struct Link {
    NodeIndex source;
    NodeIndex target;

    friend auto operator<=>(const Link&, const Link&) = default;
    friend bool operator==(const Link&, const Link&) = default;
};

/// Simple graph topology over nodes 0..n-1, directed or undirected.
///
/// Links are kept sorted and unique. Undirected links are stored once as
/// (min, max). Self-loops and out-of-range endpoints are rejected with
/// std::invalid_argument.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t node_count, bool directed, std::vector<Link> links);

    std::size_t node_count() const noexcept { return node_count_; }
    bool directed() const noexcept { return directed_; }
    std::span<const Link> links() const noexcept { return links_; }
    std::size_t link_count() const noexcept { return links_.size(); }

    /// Successors when directed, all neighbors otherwise. Sorted.
    std::span<const NodeIndex> out_neighbors(NodeIndex v) const { return out_[v]; }

    /// Neighbors in the underlying undirected simple graph. Sorted.
    std::span<const NodeIndex> neighbors(NodeIndex v) const { return undirected_[v]; }

    /// Number of distinct neighbors in the underlying undirected graph.
    std::size_t degree(NodeIndex v) const { return undirected_[v].size(); }

    bool has_link(NodeIndex source, NodeIndex target) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.node_count_ == b.node_count_ && a.directed_ == b.directed_ &&
               a.links_ == b.links_;
    }

private:
    std::size_t node_count_ = 0;
    bool directed_ = false;
    std::vector<Link> links_;
    std::vector<std::vector<NodeIndex>> out_;
    std::vector<std::vector<NodeIndex>> undirected_;
};

/// Component label per node (weak connectivity for directed graphs).
/// Labels are assigned 0, 1, ... in order of each component's smallest node.
std::vector<std::size_t> component_labels(const Graph& graph, std::size_t* component_count = nullptr);

/// Subgraph induced by `keep` (sorted, unique); node i of the result is keep[i].
Graph induced_subgraph(const Graph& graph, std::span<const NodeIndex> keep);

}  // namespace wssim
