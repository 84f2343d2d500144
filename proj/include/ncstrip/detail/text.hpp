#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "ncstrip/errors.hpp"

namespace ncstrip::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline int parse_int(std::string_view token, std::string_view what) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(std::string(what) + ": '" + std::string(token) + "' is not an integer");
    }
    return value;
}

// "3,1,1" -> {3,1,1}; "" -> {}
inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
    std::vector<int> values;
    text = trim(text);
    if (text.empty()) return values;
    for (auto token : split(text, ',')) values.push_back(parse_int(token, what));
    return values;
}

template <typename Range>
std::string join_ints(const Range& values, std::string_view sep = ",") {
    std::string out;
    bool first = true;
    for (int v : values) {
        if (!first) out += sep;
        out += std::to_string(v);
        first = false;
    }
    return out;
}

}  // namespace ncstrip::detail
