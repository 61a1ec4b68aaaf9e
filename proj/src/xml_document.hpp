#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Minimal namespace-aware DOM built with expat; private to the library.
namespace wssim::xml {

struct Element {
    std::string ns;    // namespace URI, empty when unqualified
    std::string name;  // local name
    // Unqualified attributes are keyed by local name, qualified ones by "uri|local".
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<Element> children;
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;

    bool is(std::string_view ns_uri, std::string_view local) const {
        return ns == ns_uri && name == local;
    }
    const std::string* attribute(std::string_view key) const;
    const Element* first_child(std::string_view ns_uri, std::string_view local) const;
    std::vector<const Element*> children_named(std::string_view ns_uri, std::string_view local) const;
};

/// Throws MalformedXmlError carrying `file_label` and the failing position.
Element parse(std::string_view content, std::string_view file_label);

/// "tns:Foo" -> "Foo".
std::string_view local_part(std::string_view qname);

/// Escapes &, <, >, " and ' for text and attribute values.
std::string escape(std::string_view text);

}  // namespace wssim::xml
