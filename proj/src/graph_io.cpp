#include "wssim/graph_io.hpp"

#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "wssim/error.hpp"
#include "xml_document.hpp"

namespace wssim {

namespace {

constexpr std::string_view kGraphMlNs = "http://graphml.graphdrawing.org/xmlns";

std::string names_json(const ParameterSet& set) {
    auto array = nlohmann::json::array();
    for (const auto& p : set) array.push_back(p.text());
    return array.dump();
}

std::string dot_quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ParameterSet parse_names(const std::string& text, std::size_t line) {
    ParameterSet set;
    if (text.empty()) return set;
    nlohmann::json array;
    try {
        array = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw FormatError(line, "parameter list is not a JSON array");
    }
    if (!array.is_array()) throw FormatError(line, "parameter list is not a JSON array");
    for (const auto& v : array) {
        if (!v.is_string()) throw FormatError(line, "parameter names must be strings");
        try {
            set.emplace(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw FormatError(line, "empty parameter name");
        }
    }
    return set;
}

}  // namespace

std::string_view to_string(GraphFormat format) {
    switch (format) {
        case GraphFormat::GraphML: return "graphml";
        case GraphFormat::Dot: return "dot";
        case GraphFormat::Csv: return "csv";
    }
    return "unknown";
}

std::optional<GraphFormat> parse_graph_format(std::string_view text) {
    if (text == "graphml") return GraphFormat::GraphML;
    if (text == "dot") return GraphFormat::Dot;
    if (text == "csv") return GraphFormat::Csv;
    return std::nullopt;
}

void write_graphml(const SimilarityNetwork& network, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"" << kGraphMlNs << "\">\n"
        << "  <key id=\"similarity\" for=\"graph\" attr.name=\"similarity\" attr.type=\"string\"/>\n";
    for (const char* attr : {"service", "operation", "inputs", "outputs"}) {
        out << "  <key id=\"" << attr << "\" for=\"node\" attr.name=\"" << attr
            << "\" attr.type=\"string\"/>\n";
    }
    out << "  <graph id=\"" << to_string(network.kind()) << "\" edgedefault=\""
        << (network.directed() ? "directed" : "undirected") << "\">\n"
        << "    <data key=\"similarity\">" << to_string(network.kind()) << "</data>\n";
    for (const auto& op : network.nodes()) {
        out << "    <node id=\"" << xml::escape(op.id) << "\">"
            << "<data key=\"service\">" << xml::escape(op.service) << "</data>"
            << "<data key=\"operation\">" << xml::escape(op.name) << "</data>"
            << "<data key=\"inputs\">" << xml::escape(names_json(op.inputs)) << "</data>"
            << "<data key=\"outputs\">" << xml::escape(names_json(op.outputs)) << "</data>"
            << "</node>\n";
    }
    for (const auto& link : network.links()) {
        out << "    <edge source=\"" << xml::escape(network.node(link.source).id) << "\" target=\""
            << xml::escape(network.node(link.target).id) << "\"/>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_dot(const SimilarityNetwork& network, std::ostream& out) {
    const bool directed = network.directed();
    out << (directed ? "digraph " : "graph ") << dot_quote(to_string(network.kind())) << " {\n";
    for (const auto& op : network.nodes())
        out << "  " << dot_quote(op.id) << " [label=" << dot_quote(op.name) << "];\n";
    const char* arrow = directed ? " -> " : " -- ";
    for (const auto& link : network.links()) {
        out << "  " << dot_quote(network.node(link.source).id) << arrow
            << dot_quote(network.node(link.target).id) << ";\n";
    }
    out << "}\n";
}

void write_csv(const SimilarityNetwork& network, std::ostream& out) {
    out << "source,target,kind\n";
    for (const auto& link : network.links()) {
        out << csv_field(network.node(link.source).id) << ','
            << csv_field(network.node(link.target).id) << ',' << to_string(network.kind()) << '\n';
    }
}

void write_graph(const SimilarityNetwork& network, GraphFormat format, std::ostream& out) {
    switch (format) {
        case GraphFormat::GraphML: write_graphml(network, out); break;
        case GraphFormat::Dot: write_dot(network, out); break;
        case GraphFormat::Csv: write_csv(network, out); break;
    }
}

SimilarityNetwork read_graphml(std::string_view content) {
    xml::Element root;
    try {
        root = xml::parse(content, "graphml");
    } catch (const MalformedXmlError& e) {
        throw FormatError(e.where().line, e.what());
    }
    if (root.name != "graphml" || (!root.ns.empty() && root.ns != kGraphMlNs))
        throw FormatError(root.line, "root element is not graphml");

    std::unordered_map<std::string, std::string> key_names;  // key id -> attr.name
    for (const auto& c : root.children) {
        if (c.name != "key") continue;
        const auto* id = c.attribute("id");
        const auto* name = c.attribute("attr.name");
        if (id != nullptr) key_names[*id] = name ? *name : *id;
    }
    const xml::Element* graph = nullptr;
    for (const auto& c : root.children) {
        if (c.name != "graph") continue;
        if (graph != nullptr) throw FormatError(c.line, "more than one graph");
        graph = &c;
    }
    if (graph == nullptr) throw FormatError(root.line, "no graph element");

    const auto data_of = [&](const xml::Element& e) {
        std::unordered_map<std::string, const xml::Element*> data;
        for (const auto& d : e.children) {
            if (d.name != "data") continue;
            const auto* key = d.attribute("key");
            if (key == nullptr) throw FormatError(d.line, "data element without key");
            const auto it = key_names.find(*key);
            data[it == key_names.end() ? *key : it->second] = &d;
        }
        return data;
    };

    const auto graph_data = data_of(*graph);
    const auto kind_it = graph_data.find("similarity");
    if (kind_it == graph_data.end()) throw FormatError(graph->line, "graph has no similarity kind");
    const auto kind = parse_similarity_kind(kind_it->second->text);
    if (!kind) throw FormatError(kind_it->second->line, "unknown similarity kind '" + kind_it->second->text + "'");

    const auto* edgedefault = graph->attribute("edgedefault");
    const bool directed = edgedefault != nullptr && *edgedefault == "directed";
    if (directed != is_directed(*kind))
        throw FormatError(graph->line, "edgedefault does not match the similarity kind");

    std::vector<Operation> nodes;
    std::unordered_map<std::string, NodeIndex> index;
    std::vector<Link> links;
    for (const auto& c : graph->children) {
        if (c.name == "node") {
            const auto* id = c.attribute("id");
            if (id == nullptr || id->empty()) throw FormatError(c.line, "node without id");
            if (!index.emplace(*id, nodes.size()).second)
                throw FormatError(c.line, "duplicate node id '" + *id + "'");
            const auto data = data_of(c);
            const auto text = [&](const char* key) -> std::string {
                const auto it = data.find(key);
                return it == data.end() ? std::string() : it->second->text;
            };
            Operation op;
            op.id = *id;
            op.service = text("service");
            op.name = text("operation");
            if (op.name.empty()) op.name = op.id;
            op.inputs = parse_names(text("inputs"), c.line);
            op.outputs = parse_names(text("outputs"), c.line);
            nodes.push_back(std::move(op));
        }
    }
    for (const auto& c : graph->children) {
        if (c.name != "edge") continue;
        const auto* source = c.attribute("source");
        const auto* target = c.attribute("target");
        if (source == nullptr || target == nullptr) throw FormatError(c.line, "edge without endpoints");
        const auto s = index.find(*source);
        const auto t = index.find(*target);
        if (s == index.end() || t == index.end()) throw FormatError(c.line, "edge references an unknown node");
        if (s->second == t->second) throw FormatError(c.line, "self-loop on '" + *source + "'");
        links.push_back({s->second, t->second});
    }
    const auto n = nodes.size();
    return SimilarityNetwork(*kind, std::move(nodes), Graph(n, directed, std::move(links)));
}

}  // namespace wssim
