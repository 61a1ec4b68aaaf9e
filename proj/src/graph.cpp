#include "wssim/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wssim {

Graph::Graph(std::size_t node_count, bool directed, std::vector<Link> links)
    : node_count_(node_count), directed_(directed), links_(std::move(links)) {
    for (auto& link : links_) {
        if (link.source >= node_count_ || link.target >= node_count_)
            throw std::invalid_argument("link endpoint out of range");
        if (link.source == link.target)
            throw std::invalid_argument("self-loop on node " + std::to_string(link.source));
        if (!directed_ && link.source > link.target) std::swap(link.source, link.target);
    }
    std::sort(links_.begin(), links_.end());
    links_.erase(std::unique(links_.begin(), links_.end()), links_.end());

    out_.assign(node_count_, {});
    undirected_.assign(node_count_, {});
    for (const auto& link : links_) {
        out_[link.source].push_back(link.target);
        if (!directed_) out_[link.target].push_back(link.source);
        undirected_[link.source].push_back(link.target);
        undirected_[link.target].push_back(link.source);
    }
    for (auto& adj : out_) std::sort(adj.begin(), adj.end());
    for (auto& adj : undirected_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
}

bool Graph::has_link(NodeIndex source, NodeIndex target) const {
    if (source >= node_count_ || target >= node_count_) return false;
    const auto& adj = out_[source];
    return std::binary_search(adj.begin(), adj.end(), target);
}

std::vector<std::size_t> component_labels(const Graph& graph, std::size_t* component_count) {
    constexpr auto kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(graph.node_count(), kUnset);
    std::vector<NodeIndex> stack;
    std::size_t next = 0;
    for (NodeIndex start = 0; start < graph.node_count(); ++start) {
        if (label[start] != kUnset) continue;
        label[start] = next;
        stack.push_back(start);
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : graph.neighbors(v)) {
                if (label[w] == kUnset) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (component_count != nullptr) *component_count = next;
    return label;
}

Graph induced_subgraph(const Graph& graph, std::span<const NodeIndex> keep) {
    constexpr auto kDropped = static_cast<std::size_t>(-1);
    std::vector<std::size_t> remap(graph.node_count(), kDropped);
    for (std::size_t i = 0; i < keep.size(); ++i) remap.at(keep[i]) = i;
    std::vector<Link> links;
    for (const auto& link : graph.links()) {
        if (remap[link.source] != kDropped && remap[link.target] != kDropped)
            links.push_back({remap[link.source], remap[link.target]});
    }
    return Graph(keep.size(), graph.directed(), std::move(links));
}

}  // namespace wssim
