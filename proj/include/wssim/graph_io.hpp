#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "wssim/network.hpp"

namespace wssim {

enum class GraphFormat { GraphML, Dot, Csv };

std::string_view to_string(GraphFormat format);
std::optional<GraphFormat> parse_graph_format(std::string_view text);

/// GraphML with the similarity kind on the graph element and, on each node,
/// data keys service, operation, inputs, outputs (the two sets as JSON arrays).
void write_graphml(const SimilarityNetwork& network, std::ostream& out);

/// Graphviz; node labels are operation names.
void write_dot(const SimilarityNetwork& network, std::ostream& out);

/// Link list with header "source,target,kind"; ids are RFC 4180 quoted when needed.
void write_csv(const SimilarityNetwork& network, std::ostream& out);

void write_graph(const SimilarityNetwork& network, GraphFormat format, std::ostream& out);

/// Reads the GraphML written by write_graphml. Throws FormatError.
SimilarityNetwork read_graphml(std::string_view content);

}  // namespace wssim
