#include "wssim/error.hpp"

#include <sstream>

namespace wssim {

std::string SourcePosition::to_string() const {
    std::ostringstream os;
    os << (file.empty() ? "<input>" : file);
    if (line != 0) {
        os << ':' << line;
        if (column != 0) os << ':' << column;
    }
    return os.str();
}

MalformedXmlError::MalformedXmlError(SourcePosition where, const std::string& detail)
    : Error(where.to_string() + ": malformed XML: " + detail), where_(std::move(where)) {}

UnsupportedDescriptionError::UnsupportedDescriptionError(SourcePosition where,
                                                         const std::string& detail)
    : Error(where.to_string() + ": unsupported description: " + detail),
      where_(std::move(where)) {}

EmptyCorpusError::EmptyCorpusError(const std::string& directory)
    : Error("empty corpus: no .wsdl or .sawsdl file under " + directory) {}

FormatError::FormatError(std::size_t line, const std::string& detail)
    : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}

InfeasibleGraphError::InfeasibleGraphError(std::size_t nodes, std::size_t links)
    : Error("a simple graph on " + std::to_string(nodes) + " nodes cannot hold " +
            std::to_string(links) + " links") {}

EmptyGoalError::EmptyGoalError() : Error("request has no desired output") {}

}  // namespace wssim
