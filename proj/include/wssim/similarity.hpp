#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "wssim/collection.hpp"

namespace wssim {

enum class SimilarityKind { Full, Partial, Excess, Relation };

inline constexpr std::array<SimilarityKind, 4> kAllSimilarityKinds{
    SimilarityKind::Full, SimilarityKind::Partial, SimilarityKind::Excess,
    SimilarityKind::Relation};

/// Partial and Excess are asymmetric; Full and Relation are symmetric.
constexpr bool is_directed(SimilarityKind kind) noexcept {
    return kind == SimilarityKind::Partial || kind == SimilarityKind::Excess;
}

std::string_view to_string(SimilarityKind kind);
std::optional<SimilarityKind> parse_similarity_kind(std::string_view text);

// Set relations on parameter names.
bool intersects(const ParameterSet& a, const ParameterSet& b);
bool includes(const ParameterSet& super, const ParameterSet& sub);
bool strictly_includes(const ParameterSet& super, const ParameterSet& sub);

// In every predicate I1, O1 belong to `a` and I2, O2 to `b`.

/// (I1 ∩ I2 ≠ ∅) ∧ (O1 = O2)
bool full_sim(const Operation& a, const Operation& b);

/// (I1 ∩ I2 ≠ ∅) ∧ (O1 ⊃ O2): `b` is partially similar to `a`.
bool partial_sim(const Operation& a, const Operation& b);

/// (I1 ⊇ I2) ∧ (O1 ⊂ O2): `b` is similar to `a` with excess.
bool excess_sim(const Operation& a, const Operation& b);

/// (I1 ∩ I2 = ∅) ∧ (O1 = O2)
bool relation_sim(const Operation& a, const Operation& b);

bool evaluate(SimilarityKind kind, const Operation& a, const Operation& b);

}  // namespace wssim
