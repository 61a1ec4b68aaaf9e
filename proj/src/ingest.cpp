#include "wssim/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "wssim/error.hpp"
#include "xml_document.hpp"

namespace wssim {

namespace {

constexpr std::string_view kWsdlNs = "http://schemas.xmlsoap.org/wsdl/";

bool is_xsd(std::string_view ns) {
    return ns == "http://www.w3.org/2001/XMLSchema" || ns == "http://www.w3.org/2000/10/XMLSchema" ||
           ns == "http://www.w3.org/1999/XMLSchema";
}

bool is_xsd_element(const xml::Element& e, std::string_view local) {
    return is_xsd(e.ns) && e.name == local;
}

struct NamedParameter {
    std::string name;
    std::string type;
};

/// Lookup tables over the <types> section, keyed by local name.
class SchemaIndex {
public:
    explicit SchemaIndex(const xml::Element& definitions) {
        for (const auto* types : definitions.children_named(kWsdlNs, "types")) {
            for (const auto& schema : types->children) {
                if (!is_xsd_element(schema, "schema")) continue;
                for (const auto& item : schema.children) {
                    const auto* name = item.attribute("name");
                    if (name == nullptr) continue;
                    if (is_xsd_element(item, "element")) elements_.emplace(*name, &item);
                    if (is_xsd_element(item, "complexType")) complex_types_.emplace(*name, &item);
                }
            }
        }
    }

    /// Child elements of the complex type behind a top-level element, empty if none.
    std::vector<NamedParameter> children_of_element(std::string_view element_qname) const {
        const auto it = elements_.find(std::string(xml::local_part(element_qname)));
        if (it == elements_.end()) return {};
        const auto& element = *it->second;
        if (const auto* type = element.attribute("type")) return children_of_type(*type);
        for (const auto& c : element.children)
            if (is_xsd_element(c, "complexType")) return children_of_complex_type(c, 0);
        return {};
    }

    std::vector<NamedParameter> children_of_type(std::string_view type_qname) const {
        return children_of_type(type_qname, 0);
    }

private:
    static constexpr int kMaxBaseDepth = 8;

    std::vector<NamedParameter> children_of_type(std::string_view type_qname, int depth) const {
        const auto it = complex_types_.find(std::string(xml::local_part(type_qname)));
        if (it == complex_types_.end()) return {};
        return children_of_complex_type(*it->second, depth);
    }

    // Collects element particles below a complex type without entering the
    // particles themselves; extension bases contribute their own children.
    std::vector<NamedParameter> children_of_complex_type(const xml::Element& type, int depth) const {
        std::vector<NamedParameter> out;
        std::function<void(const xml::Element&)> walk = [&](const xml::Element& node) {
            for (const auto& c : node.children) {
                if (!is_xsd(c.ns)) continue;
                if (c.name == "element") {
                    const auto* name = c.attribute("name");
                    const auto* ref = c.attribute("ref");
                    const auto* type_attr = c.attribute("type");
                    std::string n = name ? *name : ref ? std::string(xml::local_part(*ref)) : "";
                    if (!n.empty()) out.push_back({std::move(n), type_attr ? *type_attr : ""});
                } else if (c.name == "extension") {
                    if (const auto* base = c.attribute("base"); base && depth < kMaxBaseDepth) {
                        auto inherited = children_of_type(*base, depth + 1);
                        out.insert(out.end(), inherited.begin(), inherited.end());
                    }
                    walk(c);
                } else if (c.name == "sequence" || c.name == "all" || c.name == "choice" ||
                           c.name == "complexContent" || c.name == "restriction") {
                    walk(c);
                }
            }
        };
        walk(type);
        return out;
    }

    std::unordered_map<std::string, const xml::Element*> elements_;
    std::unordered_map<std::string, const xml::Element*> complex_types_;
};

std::vector<NamedParameter> message_parameters(const xml::Element* message, const SchemaIndex& schema,
                                               ExtractionMode mode) {
    std::vector<NamedParameter> out;
    if (message == nullptr) return out;
    for (const auto* part : message->children_named(kWsdlNs, "part")) {
        const auto* name = part->attribute("name");
        const auto* element = part->attribute("element");
        const auto* type = part->attribute("type");
        if (mode == ExtractionMode::Flatten) {
            auto children = element ? schema.children_of_element(*element)
                            : type  ? schema.children_of_type(*type)
                                    : std::vector<NamedParameter>{};
            if (!children.empty()) {
                out.insert(out.end(), children.begin(), children.end());
                continue;
            }
        }
        if (element != nullptr) {
            out.push_back({std::string(xml::local_part(*element)), *element});
        } else if (name != nullptr) {
            out.push_back({*name, type ? *type : ""});
        }
    }
    return out;
}

void add_parameters(const std::vector<NamedParameter>& params, ParameterSet& set,
                    std::map<std::string, std::string>& types) {
    for (const auto& p : params) {
        try {
            const auto [it, inserted] = set.emplace(p.name);
            if (inserted && !p.type.empty()) types.emplace(it->text(), p.type);
        } catch (const std::invalid_argument&) {
            // blank names carry no information
        }
    }
}

}  // namespace

std::string_view to_string(ExtractionMode mode) {
    return mode == ExtractionMode::Flatten ? "flatten" : "parts";
}

std::optional<ExtractionMode> parse_extraction_mode(std::string_view text) {
    if (text == "parts") return ExtractionMode::PartNames;
    if (text == "flatten") return ExtractionMode::Flatten;
    return std::nullopt;
}

std::vector<Operation> parse_description(std::string_view content, std::string_view service_id,
                                         ExtractionMode mode, std::string_view file_label) {
    const auto label = file_label.empty() ? service_id : file_label;
    const auto root = xml::parse(content, label);
    if (!root.is(kWsdlNs, "definitions")) {
        throw UnsupportedDescriptionError(
            {std::string(label), root.line, root.column},
            "root element is {" + root.ns + "}" + root.name + ", expected WSDL 1.1 definitions");
    }

    const SchemaIndex schema(root);
    std::unordered_map<std::string, const xml::Element*> messages;
    for (const auto* m : root.children_named(kWsdlNs, "message"))
        if (const auto* name = m->attribute("name")) messages.emplace(*name, m);

    const auto find_message = [&](const xml::Element* io) -> const xml::Element* {
        if (io == nullptr) return nullptr;
        const auto* ref = io->attribute("message");
        if (ref == nullptr) return nullptr;
        const auto it = messages.find(std::string(xml::local_part(*ref)));
        return it == messages.end() ? nullptr : it->second;
    };

    std::vector<Operation> operations;
    std::unordered_map<std::string, int> id_uses;
    for (const auto* port_type : root.children_named(kWsdlNs, "portType")) {
        for (const auto* op_element : port_type->children_named(kWsdlNs, "operation")) {
            const auto* name = op_element->attribute("name");
            if (name == nullptr || name->empty()) {
                throw UnsupportedDescriptionError({std::string(label), op_element->line,
                                                   op_element->column},
                                                  "portType operation without a name");
            }
            Operation op;
            op.name = *name;
            op.service = std::string(service_id);
            op.id = default_operation_id(service_id, *name);
            if (const int uses = ++id_uses[op.id]; uses > 1) op.id += "#" + std::to_string(uses);

            add_parameters(message_parameters(find_message(op_element->first_child(kWsdlNs, "input")),
                                              schema, mode),
                           op.inputs, op.types);
            add_parameters(message_parameters(find_message(op_element->first_child(kWsdlNs, "output")),
                                              schema, mode),
                           op.outputs, op.types);
            operations.push_back(std::move(op));
        }
    }
    return operations;
}

bool is_description_file(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".wsdl" || ext == ".sawsdl";
}

LoadResult load_collection(const std::filesystem::path& directory, ExtractionMode mode) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(directory)) {
        if (entry.is_regular_file() && is_description_file(entry.path())) files.push_back(entry.path());
    }
    if (files.empty()) throw EmptyCorpusError(directory.string());
    std::sort(files.begin(), files.end());

    LoadResult result;
    std::vector<Operation> operations;
    for (const auto& file : files) {
        const auto relative = fs::relative(file, directory);
        const auto service_id = (relative.parent_path() / relative.stem()).generic_string();
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            result.warnings.push_back(file.string() + ": cannot open file");
            continue;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        try {
            auto ops = parse_description(buffer.str(), service_id, mode, file.string());
            operations.insert(operations.end(), std::make_move_iterator(ops.begin()),
                              std::make_move_iterator(ops.end()));
            ++result.files_read;
        } catch (const Error& e) {
            result.warnings.emplace_back(e.what());
        }
    }
    result.collection = Collection(std::move(operations), directory.generic_string());
    return result;
}

// ---------------------------------------------------------------------------
// Canonical collection format

namespace {

constexpr std::string_view kFormatTag = "wssim-collection";
constexpr int kFormatVersion = 1;

ParameterSet read_names(const nlohmann::json& record, const char* key, std::size_t line) {
    const auto it = record.find(key);
    if (it == record.end()) throw FormatError(line, std::string("missing field '") + key + "'");
    if (!it->is_array()) throw FormatError(line, std::string("field '") + key + "' must be an array");
    ParameterSet set;
    for (const auto& v : *it) {
        if (!v.is_string()) throw FormatError(line, std::string("field '") + key + "' must hold strings");
        try {
            set.emplace(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw FormatError(line, std::string("empty parameter name in '") + key + "'");
        }
    }
    return set;
}

std::string read_string(const nlohmann::json& record, const char* key, std::size_t line) {
    const auto it = record.find(key);
    if (it == record.end()) throw FormatError(line, std::string("missing field '") + key + "'");
    if (!it->is_string()) throw FormatError(line, std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

}  // namespace

Collection read_canonical(std::istream& in) {
    static const std::unordered_set<std::string> kRecordKeys{"id",      "service", "operation",
                                                             "inputs",  "outputs", "types"};
    std::vector<Operation> operations;
    std::unordered_set<std::string> ids;
    std::string source;
    bool seen_record = false;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json record;
        try {
            record = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(line, std::string("invalid JSON: ") + e.what());
        }
        if (!record.is_object()) throw FormatError(line, "record must be a JSON object");

        if (record.contains("format")) {
            if (seen_record) throw FormatError(line, "header must be the first record");
            if (record["format"] != kFormatTag) throw FormatError(line, "unknown format tag");
            if (record.value("version", 0) != kFormatVersion)
                throw FormatError(line, "unsupported format version");
            if (record.contains("source")) source = read_string(record, "source", line);
            seen_record = true;
            continue;
        }
        seen_record = true;

        for (const auto& [key, value] : record.items())
            if (!kRecordKeys.contains(key)) throw FormatError(line, "unknown field '" + key + "'");

        Operation op;
        op.service = read_string(record, "service", line);
        op.name = read_string(record, "operation", line);
        if (op.name.empty()) throw FormatError(line, "empty operation name");
        op.id = record.contains("id") ? read_string(record, "id", line)
                                      : default_operation_id(op.service, op.name);
        if (op.id.empty()) throw FormatError(line, "empty operation id");
        if (!ids.insert(op.id).second) throw FormatError(line, "duplicate operation id '" + op.id + "'");
        op.inputs = read_names(record, "inputs", line);
        op.outputs = read_names(record, "outputs", line);
        if (const auto it = record.find("types"); it != record.end()) {
            if (!it->is_object()) throw FormatError(line, "field 'types' must be an object");
            for (const auto& [name, type] : it->items()) {
                if (!type.is_string()) throw FormatError(line, "type annotations must be strings");
                op.types.emplace(name, type.get<std::string>());
            }
        }
        operations.push_back(std::move(op));
    }
    return Collection(std::move(operations), std::move(source));
}

Collection read_canonical(std::string_view content) {
    std::istringstream in{std::string(content)};
    return read_canonical(in);
}

void write_canonical(const Collection& collection, std::ostream& out) {
    nlohmann::json header{{"format", kFormatTag}, {"version", kFormatVersion},
                          {"source", collection.source()}};
    out << header.dump() << '\n';
    for (const auto& op : collection.operations()) {
        nlohmann::json record{{"id", op.id}, {"service", op.service}, {"operation", op.name}};
        auto& inputs = record["inputs"] = nlohmann::json::array();
        for (const auto& p : op.inputs) inputs.push_back(p.text());
        auto& outputs = record["outputs"] = nlohmann::json::array();
        for (const auto& p : op.outputs) outputs.push_back(p.text());
        if (!op.types.empty()) record["types"] = op.types;
        out << record.dump() << '\n';
    }
}

std::string write_canonical(const Collection& collection) {
    std::ostringstream out;
    write_canonical(collection, out);
    return out.str();
}

}  // namespace wssim
