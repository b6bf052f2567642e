#pragma once

#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace litdoc::textutil {

// Accepts only a complete strtod parse with no leading whitespace.
inline bool parse_full_double(std::string_view text, double& out) {
    if (text.empty() || text.front() == ' ' || text.front() == '\t') {
        return false;
    }
    std::string buf(text);
    char* end = nullptr;
    out = std::strtod(buf.c_str(), &end);
    return end == buf.c_str() + buf.size();
}

// Splits on '\n'; a single trailing newline does not produce an empty
// final segment. "" -> [""], "a\n" -> ["a"], "a\n\n" -> ["a", ""].
inline std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (;;) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
        if (start == text.size()) {
            break; // trailing newline
        }
    }
    return lines;
}

inline std::string join_lines(std::span<const std::string> lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) {
            out += '\n';
        }
        out += lines[i];
    }
    return out;
}

// Name usable bare in generated code: [A-Za-z.][A-Za-z0-9._]*.
inline bool plain_r_name(std::string_view name) {
    auto alpha = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
    };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (name.empty() || (!alpha(name.front()) && name.front() != '.')) {
        return false;
    }
    for (char c : name) {
        if (!alpha(c) && !digit(c) && c != '.' && c != '_') {
            return false;
        }
    }
    return true;
}

inline std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
        text.remove_suffix(1);
    }
    return text;
}

} // namespace litdoc::textutil
