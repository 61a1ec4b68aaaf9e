#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wssim {

/// A parameter name compared character-for-character. Surrounding whitespace
/// is trimmed on construction; nothing else is normalized.
class ParameterName {
public:
    /// Throws std::invalid_argument when the trimmed text is empty.
    explicit ParameterName(std::string_view text);

    const std::string& text() const noexcept { return text_; }

    friend auto operator<=>(const ParameterName&, const ParameterName&) = default;
    friend bool operator==(const ParameterName&, const ParameterName&) = default;

private:
    std::string text_;
};

using ParameterSet = std::set<ParameterName>;

ParameterSet make_parameter_set(std::initializer_list<std::string_view> names);
ParameterSet make_parameter_set(std::span<const std::string> names);

/// One service operation: a name plus its input and output parameter-name sets.
struct Operation {
    std::string id;
    std::string name;
    std::string service;
    ParameterSet inputs;
    ParameterSet outputs;
    // Declared data types by parameter name. Carried for export only; never
    // consulted by the similarity predicates.
    std::map<std::string, std::string> types;

    friend bool operator==(const Operation&, const Operation&) = default;
};

/// An ordered set of operations with pairwise distinct ids, kept sorted by
/// (service, name, id).
class Collection {
public:
    Collection() = default;

    /// Sorts the operations; throws std::invalid_argument on duplicate or empty ids.
    explicit Collection(std::vector<Operation> operations, std::string source = {});

    std::span<const Operation> operations() const noexcept { return operations_; }
    const std::string& source() const noexcept { return source_; }

    std::size_t size() const noexcept { return operations_.size(); }
    bool empty() const noexcept { return operations_.empty(); }
    const Operation& operator[](std::size_t i) const { return operations_[i]; }

    std::optional<std::size_t> index_of(std::string_view id) const;
    const Operation* find(std::string_view id) const;

    /// Copy without the operations whose ids are listed.
    Collection without(std::initializer_list<std::string_view> ids) const;

    friend bool operator==(const Collection&, const Collection&) = default;

private:
    std::vector<Operation> operations_;
    std::string source_;
};

/// Default identifier of an operation read from a description: "service#name".
std::string default_operation_id(std::string_view service, std::string_view name);

}  // namespace wssim
