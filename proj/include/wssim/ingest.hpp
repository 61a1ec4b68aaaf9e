#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wssim/collection.hpp"

namespace wssim {

/// Where parameter names are read from in a WSDL message part.
enum class ExtractionMode {
    /// The part name, or the local name of the schema element the part references.
    PartNames,
    /// As PartNames, but a part whose element or type resolves to a complex
    /// type contributes the local names of that type's child elements instead.
    Flatten,
};

std::string_view to_string(ExtractionMode mode);
std::optional<ExtractionMode> parse_extraction_mode(std::string_view text);

/// Extracts one Operation per portType operation of a WSDL 1.1 document.
///
/// `service_id` becomes Operation::service and the prefix of Operation::id;
/// `file_label` is only used to locate errors. Throws MalformedXmlError or
/// UnsupportedDescriptionError.
std::vector<Operation> parse_description(std::string_view content,
                                         std::string_view service_id,
                                         ExtractionMode mode = ExtractionMode::PartNames,
                                         std::string_view file_label = {});

struct LoadResult {
    Collection collection;
    std::vector<std::string> warnings;
    std::size_t files_read = 0;
};

/// True for file names ending in .wsdl or .sawsdl (any case).
bool is_description_file(const std::filesystem::path& path);

/// Parses every description file below `directory` (recursively, in path
/// order). Files that fail to parse become warnings. Throws EmptyCorpusError
/// when no description file exists, std::filesystem::filesystem_error when the
/// directory cannot be listed.
LoadResult load_collection(const std::filesystem::path& directory,
                           ExtractionMode mode = ExtractionMode::PartNames);

/// Canonical collection format: JSON Lines. An optional header line
/// {"format":"wssim-collection","version":1,"source":...} is followed by one
/// record per operation with keys id (optional on read), service, operation,
/// inputs, outputs and optionally types. Throws FormatError with the line number.
Collection read_canonical(std::istream& in);
Collection read_canonical(std::string_view content);

void write_canonical(const Collection& collection, std::ostream& out);
std::string write_canonical(const Collection& collection);

}  // namespace wssim
