#include "wssim/network.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace wssim {

SimilarityNetwork::SimilarityNetwork(SimilarityKind kind, std::vector<Operation> nodes, Graph graph)
    : kind_(kind), nodes_(std::move(nodes)), graph_(std::move(graph)) {
    if (graph_.node_count() != nodes_.size())
        throw std::invalid_argument("graph node count differs from operation count");
    if (graph_.directed() != is_directed(kind_))
        throw std::invalid_argument("graph directedness does not match the similarity kind");
}

std::size_t SimilarityNetwork::isolated_count() const {
    std::size_t isolated = 0;
    for (NodeIndex v = 0; v < graph_.node_count(); ++v)
        if (graph_.degree(v) == 0) ++isolated;
    return isolated;
}

namespace {

/// Operations grouped by their exact output set.
class OutputIndex {
public:
    OutputIndex(const OutputIndex&) = delete;
    OutputIndex& operator=(const OutputIndex&) = delete;

    explicit OutputIndex(const Collection& collection) {
        for (NodeIndex i = 0; i < collection.size(); ++i) {
            const auto& outputs = collection[i].outputs;
            auto [it, inserted] = slot_.emplace(outputs, keys_.size());
            if (inserted) {
                keys_.push_back(&it->first);
                groups_.emplace_back();
            }
            groups_[it->second].push_back(i);
        }
    }

    std::size_t key_count() const { return keys_.size(); }
    const ParameterSet& key(std::size_t k) const { return *keys_[k]; }
    const std::vector<NodeIndex>& group(std::size_t k) const { return groups_[k]; }

    std::optional<std::size_t> find(const ParameterSet& outputs) const {
        const auto it = slot_.find(outputs);
        if (it == slot_.end()) return std::nullopt;
        return it->second;
    }

    /// Every (super, sub) pair of keys where key(super) strictly contains key(sub).
    std::vector<std::pair<std::size_t, std::size_t>> strict_containments() const {
        constexpr std::size_t kMaxEnumeratedSize = 20;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t super = 0; super < key_count(); ++super) {
            const auto& outputs = key(super);
            const auto size = outputs.size();
            const bool enumerate = size < kMaxEnumeratedSize && ((std::size_t{1} << size) - 1) <= key_count();
            if (enumerate) {
                // Probe every proper subset of the output set.
                const std::vector<ParameterName> elements(outputs.begin(), outputs.end());
                const std::size_t full_mask = (std::size_t{1} << size) - 1;
                for (std::size_t mask = 0; mask < full_mask; ++mask) {
                    ParameterSet subset;
                    for (std::size_t bit = 0; bit < size; ++bit)
                        if (mask & (std::size_t{1} << bit)) subset.insert(subset.end(), elements[bit]);
                    if (auto sub = find(subset)) pairs.emplace_back(super, *sub);
                }
            } else {
                for (std::size_t sub = 0; sub < key_count(); ++sub)
                    if (strictly_includes(outputs, key(sub))) pairs.emplace_back(super, sub);
            }
        }
        return pairs;
    }

private:
    std::map<ParameterSet, std::size_t> slot_;  // key pointers below point into these nodes
    std::vector<const ParameterSet*> keys_;
    std::vector<std::vector<NodeIndex>> groups_;
};

}  // namespace

SimilarityNetwork build_network(const Collection& collection, SimilarityKind kind) {
    const OutputIndex index(collection);
    std::vector<Link> links;

    switch (kind) {
        case SimilarityKind::Full:
        case SimilarityKind::Relation: {
            const bool want_overlap = kind == SimilarityKind::Full;
            for (std::size_t k = 0; k < index.key_count(); ++k) {
                const auto& group = index.group(k);
                for (std::size_t i = 0; i < group.size(); ++i) {
                    for (std::size_t j = i + 1; j < group.size(); ++j) {
                        const bool overlap =
                            intersects(collection[group[i]].inputs, collection[group[j]].inputs);
                        if (overlap == want_overlap) links.push_back({group[i], group[j]});
                    }
                }
            }
            break;
        }
        case SimilarityKind::Partial:
        case SimilarityKind::Excess: {
            for (const auto& [super, sub] : index.strict_containments()) {
                for (auto rich : index.group(super)) {
                    for (auto poor : index.group(sub)) {
                        const auto& r = collection[rich];
                        const auto& p = collection[poor];
                        if (kind == SimilarityKind::Partial) {
                            if (intersects(r.inputs, p.inputs)) links.push_back({rich, poor});
                        } else if (includes(p.inputs, r.inputs)) {
                            links.push_back({poor, rich});
                        }
                    }
                }
            }
            break;
        }
    }

    std::vector<Operation> nodes(collection.operations().begin(), collection.operations().end());
    return SimilarityNetwork(kind, std::move(nodes), Graph(collection.size(), is_directed(kind), std::move(links)));
}

SimilarityNetwork trim(const SimilarityNetwork& network) {
    std::vector<NodeIndex> keep;
    std::vector<Operation> nodes;
    for (NodeIndex v = 0; v < network.node_count(); ++v) {
        if (network.graph().degree(v) > 0) {
            keep.push_back(v);
            nodes.push_back(network.node(v));
        }
    }
    return SimilarityNetwork(network.kind(), std::move(nodes), induced_subgraph(network.graph(), keep));
}

std::vector<Community> components(const SimilarityNetwork& network) {
    std::size_t count = 0;
    const auto label = component_labels(network.graph(), &count);
    std::vector<Community> out(count);
    for (NodeIndex v = 0; v < network.node_count(); ++v) out[label[v]].members.push_back(v);
    for (const auto& link : network.links()) ++out[label[link.source]].internal_links;

    const auto min_id = [&](const Community& c) -> const std::string& {
        const std::string* best = &network.node(c.members.front()).id;
        for (auto m : c.members)
            if (network.node(m).id < *best) best = &network.node(m).id;
        return *best;
    };
    std::sort(out.begin(), out.end(), [&](const Community& a, const Community& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        if (a.internal_links != b.internal_links) return a.internal_links > b.internal_links;
        return min_id(a) < min_id(b);
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].ordinal = i + 1;
    return out;
}

}  // namespace wssim
