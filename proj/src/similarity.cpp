#include "wssim/similarity.hpp"

#include <algorithm>

namespace wssim {

std::string_view to_string(SimilarityKind kind) {
    switch (kind) {
        case SimilarityKind::Full: return "full";
        case SimilarityKind::Partial: return "partial";
        case SimilarityKind::Excess: return "excess";
        case SimilarityKind::Relation: return "relation";
    }
    return "unknown";
}

std::optional<SimilarityKind> parse_similarity_kind(std::string_view text) {
    for (auto kind : kAllSimilarityKinds)
        if (to_string(kind) == text) return kind;
    return std::nullopt;
}

bool intersects(const ParameterSet& a, const ParameterSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            return true;
        }
    }
    return false;
}

bool includes(const ParameterSet& super, const ParameterSet& sub) {
    return sub.size() <= super.size() &&
           std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool strictly_includes(const ParameterSet& super, const ParameterSet& sub) {
    return sub.size() < super.size() && includes(super, sub);
}

bool full_sim(const Operation& a, const Operation& b) {
    return a.outputs == b.outputs && intersects(a.inputs, b.inputs);
}

bool partial_sim(const Operation& a, const Operation& b) {
    return strictly_includes(a.outputs, b.outputs) && intersects(a.inputs, b.inputs);
}

bool excess_sim(const Operation& a, const Operation& b) {
    return strictly_includes(b.outputs, a.outputs) && includes(a.inputs, b.inputs);
}

bool relation_sim(const Operation& a, const Operation& b) {
    return a.outputs == b.outputs && !intersects(a.inputs, b.inputs);
}

bool evaluate(SimilarityKind kind, const Operation& a, const Operation& b) {
    switch (kind) {
        case SimilarityKind::Full: return full_sim(a, b);
        case SimilarityKind::Partial: return partial_sim(a, b);
        case SimilarityKind::Excess: return excess_sim(a, b);
        case SimilarityKind::Relation: return relation_sim(a, b);
    }
    return false;
}

}  // namespace wssim
