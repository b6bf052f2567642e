#include "litdoc/front_matter.hpp"

#include <array>
#include <string_view>

#include "litdoc/error.hpp"
#include "litdoc/options.hpp"
#include "text_util.hpp"

namespace litdoc {

namespace {

bool is_bool_or_null_word(std::string_view s) {
    static constexpr std::array<std::string_view, 22> words{
        "y",     "Y",    "yes", "Yes", "YES", "n",     "N",     "no",
        "No",    "NO",   "true", "True", "TRUE", "false", "False",
        "FALSE", "on",   "On",  "ON",  "off", "Off",   "OFF"};
    for (auto w : words) {
        if (s == w) {
            return true;
        }
    }
    return s == "null" || s == "Null" || s == "NULL" || s == "~";
}

bool looks_numeric(std::string_view s) {
    double d = 0.0;
    return textutil::parse_full_double(s, d);
}

bool is_indicator(char c) {
    return std::string_view("-?:,[]{}#&*!|>'\"%@`").find(c) !=
           std::string_view::npos;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// yyyy-m[m]-d[d], optionally followed by a time part. Plain, these
// parse as timestamps, so "2020-01-01" must render as '2020-01-01'.
bool looks_like_timestamp(std::string_view s) {
    if (s.size() < 8) {
        return false;
    }
    std::size_t i = 0;
    for (; i < 4; ++i) {
        if (!is_digit(s[i])) {
            return false;
        }
    }
    for (int part = 0; part < 2; ++part) {
        if (i >= s.size() || s[i] != '-') {
            return false;
        }
        ++i;
        std::size_t digits = 0;
        while (i < s.size() && is_digit(s[i])) {
            ++i;
            ++digits;
        }
        if (digits < 1 || digits > 2) {
            return false;
        }
    }
    return i == s.size() || s[i] == 'T' || s[i] == 't' || s[i] == ' ';
}

// A plain scalar keeps its bytes and stays a string only when none of
// these hold; otherwise we single-quote.
bool needs_single_quote(const std::string& s) {
    if (s.empty()) {
        return true;
    }
    if (is_bool_or_null_word(s) || looks_numeric(s) || looks_like_timestamp(s)) {
        return true;
    }
    if (is_indicator(s.front())) {
        return true;
    }
    if (s.front() == ' ' || s.front() == '\t' || s.back() == ' ' ||
        s.back() == '\t') {
        return true;
    }
    if (s.find(": ") != std::string::npos || s.find(" #") != std::string::npos ||
        s.back() == ':' || s.find('\t') != std::string::npos) {
        return true;
    }
    return false;
}

std::string render_scalar(const FrontMatterScalar& value) {
    if (const bool* b = std::get_if<bool>(&value)) {
        return *b ? "true" : "false";
    }
    if (const double* d = std::get_if<double>(&value)) {
        return format_number(*d);
    }
    const std::string& s = std::get<std::string>(value);
    if (s.find('\n') != std::string::npos) {
        throw Error("front-matter values must be single-line");
    }
    if (!needs_single_quote(s)) {
        return s;
    }
    std::string out = "'";
    for (char c : s) {
        out += c;
        if (c == '\'') {
            out += '\''; // '' escapes a single quote
        }
    }
    out += '\'';
    return out;
}

void render_entries(const std::vector<FrontMatterEntry>& entries, int indent,
                    std::vector<std::string>& lines) {
    std::string pad(indent, ' ');
    for (const auto& entry : entries) {
        if (const auto* scalar = std::get_if<FrontMatterScalar>(&entry.value)) {
            lines.push_back(pad + entry.key + ": " + render_scalar(*scalar));
        } else {
            lines.push_back(pad + entry.key + ":");
            render_entries(std::get<std::vector<FrontMatterEntry>>(entry.value),
                           indent + 2, lines);
        }
    }
}

FrontMatter base_header(const std::string& title,
                        const std::optional<std::string>& author,
                        const std::optional<std::string>& date,
                        const FrontMatterExtras& extra) {
    if (title.empty()) {
        throw Error("title must be non-empty");
    }
    FrontMatter fm;
    fm.append("title", FrontMatterScalar{title});
    if (author) {
        fm.append("author", FrontMatterScalar{*author});
    }
    if (date) {
        fm.append("date", FrontMatterScalar{*date});
    }
    for (const auto& [key, value] : extra) {
        fm.append(key, FrontMatterScalar{value});
    }
    return fm;
}

} // namespace

void FrontMatter::append(std::string key, FrontMatterValue value) {
    for (const auto& entry : entries) {
        if (entry.key == key) {
            throw Error("duplicate front-matter key \"" + key + "\"");
        }
    }
    entries.push_back({std::move(key), std::move(value)});
}

std::vector<std::string> FrontMatter::render() const {
    std::vector<std::string> lines{"---"};
    render_entries(entries, 0, lines);
    lines.push_back("---");
    return lines;
}

FrontMatter rmarkdown_header(const std::string& title,
                             const std::optional<std::string>& author,
                             const std::optional<std::string>& date,
                             const std::string& output_format,
                             const FrontMatterExtras& extra) {
    FrontMatter fm = base_header(title, author, date, extra);
    fm.append("output", FrontMatterScalar{output_format});
    return fm;
}

FrontMatter workflowr_header(const std::string& title,
                             const FrontMatterExtras& extra) {
    FrontMatter fm = base_header(title, {}, {}, extra);
    fm.append("site", FrontMatterScalar{std::string("workflowr::wflow_site")});
    std::vector<FrontMatterEntry> format;
    format.push_back({"toc", FrontMatterScalar{false}});
    std::vector<FrontMatterEntry> output;
    output.push_back({"workflowr::wflow_html", std::move(format)});
    fm.append("output", std::move(output));
    return fm;
}

FrontMatter ioslides_header(const std::string& title,
                            const std::optional<std::string>& author,
                            const std::optional<std::string>& date,
                            const FrontMatterExtras& extra) {
    FrontMatter fm = base_header(title, author, date, extra);
    fm.append("output", FrontMatterScalar{std::string("ioslides_presentation")});
    return fm;
}

} // namespace litdoc
