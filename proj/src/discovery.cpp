#include "wssim/discovery.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "wssim/error.hpp"
#include "wssim/similarity.hpp"

namespace wssim {

namespace {

ParameterSet difference(const ParameterSet& a, const ParameterSet& b) {
    ParameterSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool predicate_for(MatchLevel level, const Operation& request, const Operation& candidate) {
    switch (level) {
        case MatchLevel::Full: return full_sim(request, candidate);
        case MatchLevel::Excess: return excess_sim(request, candidate);
        case MatchLevel::Partial: return partial_sim(request, candidate);
        case MatchLevel::Relation: return relation_sim(request, candidate);
    }
    return false;
}

constexpr std::array kLadder{MatchLevel::Full, MatchLevel::Excess, MatchLevel::Partial,
                             MatchLevel::Relation};

}  // namespace

std::string_view to_string(MatchLevel level) {
    switch (level) {
        case MatchLevel::Full: return "full";
        case MatchLevel::Excess: return "excess";
        case MatchLevel::Partial: return "partial";
        case MatchLevel::Relation: return "relation";
    }
    return "unknown";
}

std::optional<MatchLevel> parse_match_level(std::string_view text) {
    for (auto level : kLadder)
        if (to_string(level) == text) return level;
    return std::nullopt;
}

Request::Request(ParameterSet available_inputs, ParameterSet desired_outputs)
    : inputs_(std::move(available_inputs)), outputs_(std::move(desired_outputs)) {
    if (outputs_.empty()) throw EmptyGoalError();
}

Operation Request::as_operation() const {
    Operation op;
    op.id = "request";
    op.name = "request";
    op.inputs = inputs_;
    op.outputs = outputs_;
    return op;
}

std::vector<MatchResult> match_request(const Request& request, const Collection& collection,
                                       MatchLevel max_level) {
    const auto virtual_op = request.as_operation();
    std::vector<MatchResult> results;
    for (auto level : kLadder) {
        if (level > max_level) break;
        const auto level_begin = results.size();
        for (const auto& candidate : collection.operations()) {
            if (!predicate_for(level, virtual_op, candidate)) continue;
            MatchResult m;
            m.operation_id = candidate.id;
            m.level = level;
            m.surplus_outputs = difference(candidate.outputs, request.desired_outputs());
            m.missing_outputs = difference(request.desired_outputs(), candidate.outputs);
            m.unmet_inputs = difference(candidate.inputs, request.available_inputs());
            results.push_back(std::move(m));
        }
        std::sort(results.begin() + static_cast<std::ptrdiff_t>(level_begin), results.end(),
                  [](const MatchResult& a, const MatchResult& b) {
                      const auto da = a.surplus_outputs.size() + a.missing_outputs.size();
                      const auto db = b.surplus_outputs.size() + b.missing_outputs.size();
                      if (da != db) return da < db;
                      return a.operation_id < b.operation_id;
                  });
    }
    return results;
}

std::vector<std::string> exact_matches(const Request& request, const Collection& collection) {
    std::vector<std::string> ids;
    for (const auto& op : collection.operations())
        if (op.inputs == request.available_inputs() && op.outputs == request.desired_outputs())
            ids.push_back(op.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> suggest_bridge(const MatchResult& match, const Collection& collection,
                                        const Request& request) {
    if (match.level != MatchLevel::Relation)
        throw std::invalid_argument("bridges are only defined for Relation matches");
    if (match.unmet_inputs.empty()) return {};

    std::vector<std::pair<std::size_t, std::string>> candidates;  // (surplus, id)
    for (const auto& op : collection.operations()) {
        if (op.id == match.operation_id) continue;
        if (op.inputs.empty() || !includes(request.available_inputs(), op.inputs)) continue;
        if (!includes(op.outputs, match.unmet_inputs)) continue;
        candidates.emplace_back(op.outputs.size() - match.unmet_inputs.size(), op.id);
    }
    if (candidates.empty()) return {};
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::string> ids;
    for (const auto& [surplus, id] : candidates) {
        if (surplus != candidates.front().first) break;
        ids.push_back(id);
    }
    return ids;
}

}  // namespace wssim
