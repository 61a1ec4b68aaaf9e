#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wssim/collection.hpp"

namespace wssim {

/// Rungs of the relaxation ladder, best first.
enum class MatchLevel { Full, Excess, Partial, Relation };

std::string_view to_string(MatchLevel level);
std::optional<MatchLevel> parse_match_level(std::string_view text);

/// What the user can supply and what they want back.
class Request {
public:
    /// Throws EmptyGoalError when `desired_outputs` is empty.
    Request(ParameterSet available_inputs, ParameterSet desired_outputs);

    const ParameterSet& available_inputs() const noexcept { return inputs_; }
    const ParameterSet& desired_outputs() const noexcept { return outputs_; }

    /// The request seen as an operation (I = available inputs, O = desired outputs).
    Operation as_operation() const;

private:
    ParameterSet inputs_;
    ParameterSet outputs_;
};

struct MatchResult {
    std::string operation_id;
    MatchLevel level = MatchLevel::Full;
    ParameterSet surplus_outputs;  // produced but not asked for
    ParameterSet missing_outputs;  // asked for but not produced
    ParameterSet unmet_inputs;     // needed by the operation, not available

    friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// Matches the request against every operation, level by level down to
/// `max_level`. Grouped Full, Excess, Partial, Relation; inside a level the
/// smallest |surplus ∪ missing| comes first, then the operation id.
std::vector<MatchResult> match_request(const Request& request, const Collection& collection,
                                       MatchLevel max_level = MatchLevel::Relation);

/// Operations whose inputs equal the available inputs and whose outputs equal
/// the goal. Not part of the ladder.
std::vector<std::string> exact_matches(const Request& request, const Collection& collection);

/// One-hop bridges for a Relation match: operations whose non-empty input set
/// is drawn from the available inputs and whose outputs cover the unmet inputs. Only the
/// candidates with the fewest surplus outputs are kept, in id order.
/// Throws std::invalid_argument if `match` is not at Relation level.
std::vector<std::string> suggest_bridge(const MatchResult& match, const Collection& collection,
                                        const Request& request);

}  // namespace wssim
