#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wssim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Location inside a text source; line and column are 1-based, 0 when unknown.
struct SourcePosition {
    std::string file;
    std::size_t line = 0;
    std::size_t column = 0;

    std::string to_string() const;
};

/// Raised when a description file is not well-formed XML.
class MalformedXmlError : public Error {
public:
    MalformedXmlError(SourcePosition where, const std::string& detail);
    const SourcePosition& where() const noexcept { return where_; }

private:
    SourcePosition where_;
};

/// Raised when well-formed XML carries no recognizable WSDL 1.1 structure.
class UnsupportedDescriptionError : public Error {
public:
    UnsupportedDescriptionError(SourcePosition where, const std::string& detail);
    const SourcePosition& where() const noexcept { return where_; }

private:
    SourcePosition where_;
};

/// Raised when a corpus directory holds no recognized description file.
class EmptyCorpusError : public Error {
public:
    explicit EmptyCorpusError(const std::string& directory);
};

/// Raised by the canonical collection and graph readers.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& detail);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when a G(n, m) sample is requested with more links than a simple graph can hold.
class InfeasibleGraphError : public Error {
public:
    InfeasibleGraphError(std::size_t nodes, std::size_t links);
};

/// Raised when a discovery request names no desired output.
class EmptyGoalError : public Error {
public:
    EmptyGoalError();
};

}  // namespace wssim
