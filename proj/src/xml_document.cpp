#include "xml_document.hpp"

#include <expat.h>

#include <climits>
#include <memory>

#include "wssim/error.hpp"

namespace wssim::xml {

namespace {

constexpr char kNsSeparator = '|';

std::pair<std::string, std::string> split_expanded(const char* expanded) {
    std::string_view s(expanded);
    const auto bar = s.rfind(kNsSeparator);
    if (bar == std::string_view::npos) return {std::string(), std::string(s)};
    return {std::string(s.substr(0, bar)), std::string(s.substr(bar + 1))};
}

struct Builder {
    XML_Parser parser = nullptr;
    Element root;
    bool has_root = false;
    std::vector<Element*> stack;

    static void on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
        auto* self = static_cast<Builder*>(data);
        Element element;
        std::tie(element.ns, element.name) = split_expanded(name);
        element.line = XML_GetCurrentLineNumber(self->parser);
        element.column = XML_GetCurrentColumnNumber(self->parser) + 1;
        for (auto a = attrs; *a != nullptr; a += 2) element.attributes.emplace_back(a[0], a[1]);

        Element* placed = nullptr;
        if (self->stack.empty()) {
            self->root = std::move(element);
            self->has_root = true;
            placed = &self->root;
        } else {
            auto& siblings = self->stack.back()->children;
            siblings.push_back(std::move(element));
            placed = &siblings.back();
        }
        self->stack.push_back(placed);
    }

    static void on_end(void* data, const XML_Char*) {
        static_cast<Builder*>(data)->stack.pop_back();
    }

    static void on_text(void* data, const XML_Char* s, int len) {
        auto* self = static_cast<Builder*>(data);
        if (!self->stack.empty()) self->stack.back()->text.append(s, static_cast<std::size_t>(len));
    }
};

}  // namespace

const std::string* Element::attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes)
        if (k == key) return &v;
    return nullptr;
}

const Element* Element::first_child(std::string_view ns_uri, std::string_view local) const {
    for (const auto& c : children)
        if (c.is(ns_uri, local)) return &c;
    return nullptr;
}

std::vector<const Element*> Element::children_named(std::string_view ns_uri,
                                                    std::string_view local) const {
    std::vector<const Element*> out;
    for (const auto& c : children)
        if (c.is(ns_uri, local)) out.push_back(&c);
    return out;
}

Element parse(std::string_view content, std::string_view file_label) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreateNS("UTF-8", kNsSeparator), &XML_ParserFree);
    if (!parser) throw Error("cannot allocate XML parser");

    Builder builder;
    builder.parser = parser.get();
    XML_SetUserData(parser.get(), &builder);
    XML_SetElementHandler(parser.get(), &Builder::on_start, &Builder::on_end);
    XML_SetCharacterDataHandler(parser.get(), &Builder::on_text);

    if (content.size() > static_cast<std::size_t>(INT_MAX))
        throw MalformedXmlError({std::string(file_label), 0, 0}, "document too large");
    const auto status =
        XML_Parse(parser.get(), content.data(), static_cast<int>(content.size()), XML_TRUE);
    if (status != XML_STATUS_OK || !builder.has_root) {
        SourcePosition where{std::string(file_label), XML_GetCurrentLineNumber(parser.get()),
                             XML_GetCurrentColumnNumber(parser.get()) + 1};
        const auto code = XML_GetErrorCode(parser.get());
        throw MalformedXmlError(std::move(where), code == XML_ERROR_NONE
                                                      ? "no root element"
                                                      : XML_ErrorString(code));
    }
    return std::move(builder.root);
}

std::string_view local_part(std::string_view qname) {
    const auto colon = qname.rfind(':');
    return colon == std::string_view::npos ? qname : qname.substr(colon + 1);
}

std::string escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace wssim::xml
