#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wssim/collection.hpp"
#include "wssim/graph.hpp"
#include "wssim/similarity.hpp"

namespace wssim {

/// Operations linked by one similarity relation.
///
/// Node i carries nodes()[i]. A directed link (a, b) means
/// evaluate(kind, a, b) holds: for Partial it points from the richer operation
/// to the partially similar one, for Excess from the base operation to the one
/// similar with excess.
class SimilarityNetwork {
public:
    SimilarityNetwork() = default;
    /// Throws std::invalid_argument when the graph's node count or
    /// directedness disagrees with `nodes` and `kind`.
    SimilarityNetwork(SimilarityKind kind, std::vector<Operation> nodes, Graph graph);

    SimilarityKind kind() const noexcept { return kind_; }
    bool directed() const noexcept { return is_directed(kind_); }
    std::span<const Operation> nodes() const noexcept { return nodes_; }
    const Operation& node(NodeIndex i) const { return nodes_[i]; }
    const Graph& graph() const noexcept { return graph_; }
    std::span<const Link> links() const noexcept { return graph_.links(); }

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t link_count() const noexcept { return graph_.link_count(); }
    std::size_t isolated_count() const;

    friend bool operator==(const SimilarityNetwork&, const SimilarityNetwork&) = default;

private:
    SimilarityKind kind_ = SimilarityKind::Full;
    std::vector<Operation> nodes_;
    Graph graph_;
};

/// Builds the network for `kind` over every operation of `collection`,
/// isolated ones included. Candidate pairs come from an index of distinct
/// output sets, so only operations whose outputs stand in the required
/// relation are ever compared.
SimilarityNetwork build_network(const Collection& collection, SimilarityKind kind);

/// Drops nodes of degree 0; links are kept.
SimilarityNetwork trim(const SimilarityNetwork& network);

/// A maximal connected subgraph (weakly connected for directed networks).
struct Community {
    std::size_t ordinal = 0;
    std::vector<NodeIndex> members;  // ascending
    std::size_t internal_links = 0;

    friend bool operator==(const Community&, const Community&) = default;
};

/// Components ranked by member count desc, internal links desc, then the
/// smallest member operation id.
std::vector<Community> components(const SimilarityNetwork& network);

}  // namespace wssim
