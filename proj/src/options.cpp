#include "litdoc/options.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <system_error>

namespace litdoc {

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        throw std::invalid_argument("number not representable");
    }
    return std::string(buf, ptr);
}

OptionSet::OptionSet(std::initializer_list<Entry> entries) {
    for (const auto& [key, value] : entries) {
        set(key, value);
    }
}

void OptionSet::set(std::string key, OptionValue value) {
    if (!valid_key(key)) {
        throw std::invalid_argument("invalid chunk-option key \"" + key + "\"");
    }
    for (auto& entry : entries_) {
        if (entry.first == key) {
            entry.second = std::move(value);
            return;
        }
    }
    entries_.emplace_back(std::move(key), std::move(value));
}

const OptionValue* OptionSet::find(std::string_view key) const {
    for (const auto& entry : entries_) {
        if (entry.first == key) {
            return &entry.second;
        }
    }
    return nullptr;
}

bool OptionSet::valid_key(std::string_view key) {
    if (key.empty()) {
        return false;
    }
    for (unsigned char c : key) {
        if (std::isspace(c) || c == ',' || c == '=') {
            return false;
        }
    }
    return true;
}

} // namespace litdoc
