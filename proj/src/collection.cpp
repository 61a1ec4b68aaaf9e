#include "wssim/collection.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace wssim {

namespace {

std::string_view trim_view(std::string_view s) {
    constexpr std::string_view kSpace = " \t\r\n\f\v";
    const auto first = s.find_first_not_of(kSpace);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(kSpace);
    return s.substr(first, last - first + 1);
}

}  // namespace

ParameterName::ParameterName(std::string_view text) : text_(trim_view(text)) {
    if (text_.empty()) throw std::invalid_argument("empty parameter name");
}

ParameterSet make_parameter_set(std::initializer_list<std::string_view> names) {
    ParameterSet set;
    for (auto n : names) set.emplace(n);
    return set;
}

ParameterSet make_parameter_set(std::span<const std::string> names) {
    ParameterSet set;
    for (const auto& n : names) set.emplace(n);
    return set;
}

Collection::Collection(std::vector<Operation> operations, std::string source)
    : operations_(std::move(operations)), source_(std::move(source)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& op : operations_) {
        if (op.id.empty()) throw std::invalid_argument("operation with empty id");
        if (!seen.insert(op.id).second)
            throw std::invalid_argument("duplicate operation id '" + op.id + "'");
    }
    std::sort(operations_.begin(), operations_.end(), [](const Operation& a, const Operation& b) {
        return std::tie(a.service, a.name, a.id) < std::tie(b.service, b.name, b.id);
    });
}

std::optional<std::size_t> Collection::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < operations_.size(); ++i)
        if (operations_[i].id == id) return i;
    return std::nullopt;
}

const Operation* Collection::find(std::string_view id) const {
    const auto i = index_of(id);
    return i ? &operations_[*i] : nullptr;
}

Collection Collection::without(std::initializer_list<std::string_view> ids) const {
    std::vector<Operation> kept;
    for (const auto& op : operations_)
        if (std::find(ids.begin(), ids.end(), op.id) == ids.end()) kept.push_back(op);
    return Collection(std::move(kept), source_);
}

std::string default_operation_id(std::string_view service, std::string_view name) {
    std::string id(service);
    id += '#';
    id += name;
    return id;
}

}  // namespace wssim
