#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "wssim/discovery.hpp"
#include "wssim/metrics.hpp"
#include "wssim/network.hpp"

namespace wssim {

/// Machine-readable report; keys are the NetworkReport field names.
nlohmann::json to_json(const NetworkReport& report);
nlohmann::json to_json(const ErBaseline& baseline);
nlohmann::json to_json(const MatchResult& match);

/// Two-column property table with one property per row.
void print_report_table(const NetworkReport& report, std::ostream& out);

/// One line per community: ordinal, size, links and member operation ids.
void print_communities(const SimilarityNetwork& network, std::span<const Community> communities,
                       std::ostream& out);

}  // namespace wssim
