#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk::detail {

inline std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

// Whole-token parse; throws DomainError mentioning `what` on failure.
template <class T>
T parse_number(std::string_view text, std::string_view what) {
    const std::string_view token = trim(text);
    T value{};
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw DomainError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    }
    return value;
}

} // namespace qwalk::detail
