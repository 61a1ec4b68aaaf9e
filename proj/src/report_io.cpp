#include "wssim/report_io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace wssim {

namespace {

nlohmann::json optional_number(const std::optional<double>& value) {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

nlohmann::json names(const ParameterSet& set) {
    auto array = nlohmann::json::array();
    for (const auto& p : set) array.push_back(p.text());
    return array;
}

std::string fixed(const std::optional<double>& value, int digits = 2) {
    if (!value) return "undefined";
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << *value;
    return os.str();
}

}  // namespace

nlohmann::json to_json(const ErBaseline& baseline) {
    return {{"nodes", baseline.nodes},
            {"links", baseline.links},
            {"replicates", baseline.replicates},
            {"seed", baseline.seed},
            {"average_distance_mean", optional_number(baseline.average_distance_mean)},
            {"average_distance_std", optional_number(baseline.average_distance_std)},
            {"transitivity_mean", baseline.transitivity_mean},
            {"transitivity_std", baseline.transitivity_std}};
}

nlohmann::json to_json(const NetworkReport& report) {
    auto coverage = nlohmann::json::array();
    for (const auto& p : report.topk_coverage)
        coverage.push_back({{"k", p.k}, {"node_fraction", p.node_fraction}, {"link_fraction", p.link_fraction}});
    return {{"kind", to_string(report.kind)},
            {"directed", report.directed},
            {"total_nodes", report.total_nodes},
            {"isolated_nodes", report.isolated_nodes},
            {"trimmed_nodes", report.trimmed_nodes},
            {"components", report.components},
            {"links", report.links},
            {"average_distance", optional_number(report.average_distance)},
            {"average_distance_undirected", optional_number(report.average_distance_undirected)},
            {"triangles", report.triangles},
            {"transitivity_global", report.transitivity_global},
            {"transitivity_local_mean", report.transitivity_local_mean},
            {"largest_component_nodes", report.largest_component_nodes},
            {"largest_component_links", report.largest_component_links},
            {"coverage_threshold", report.coverage_threshold},
            {"principal_components", report.principal_components},
            {"principal_min_nodes", report.principal_min_nodes},
            {"principal_min_links", report.principal_min_links},
            {"topk_coverage", std::move(coverage)},
            {"er_baseline", report.er ? to_json(*report.er) : nlohmann::json(nullptr)}};
}

nlohmann::json to_json(const MatchResult& match) {
    return {{"operation", match.operation_id},
            {"level", to_string(match.level)},
            {"surplus_outputs", names(match.surplus_outputs)},
            {"missing_outputs", names(match.missing_outputs)},
            {"unmet_inputs", names(match.unmet_inputs)}};
}

void print_report_table(const NetworkReport& report, std::ostream& out) {
    const auto row = [&out](std::string_view label, const std::string& value) {
        out << std::left << std::setw(34) << label << value << '\n';
    };
    row("Property", std::string(to_string(report.kind)) + (report.directed ? " (directed)" : ""));
    row("Nodes", std::to_string(report.total_nodes));
    row("Isolated nodes", std::to_string(report.isolated_nodes));
    row("Nodes in trimmed network", std::to_string(report.trimmed_nodes));
    row("Components", std::to_string(report.components));
    row("Links", std::to_string(report.links));
    row("Average distance", fixed(report.average_distance));
    row("Average distance (undirected)", fixed(report.average_distance_undirected));
    row("Transitivity (global)", fixed(report.transitivity_global));
    row("Transitivity (local mean)", fixed(report.transitivity_local_mean));
    row("Triangles", std::to_string(report.triangles));
    row("Principal communities", std::to_string(report.principal_components) + " at " +
                                     fixed(report.coverage_threshold));
    row("Principal community nodes", std::to_string(report.largest_component_nodes) + " - " +
                                         std::to_string(report.principal_min_nodes));
    row("Principal community links", std::to_string(report.largest_component_links) + " - " +
                                         std::to_string(report.principal_min_links));
    if (report.er) {
        const auto& er = *report.er;
        row("ER average distance", fixed(er.average_distance_mean) + " +/- " + fixed(er.average_distance_std));
        row("ER transitivity", fixed(er.transitivity_mean, 4) + " +/- " + fixed(er.transitivity_std, 4));
        row("ER replicates / seed", std::to_string(er.replicates) + " / " + std::to_string(er.seed));
    }
}

void print_communities(const SimilarityNetwork& network, std::span<const Community> communities,
                       std::ostream& out) {
    for (const auto& c : communities) {
        out << '#' << c.ordinal << " nodes=" << c.members.size() << " links=" << c.internal_links << " :";
        for (auto m : c.members) out << ' ' << network.node(m).id;
        out << '\n';
    }
}

}  // namespace wssim
