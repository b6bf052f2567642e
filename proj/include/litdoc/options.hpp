#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace litdoc {

// A chunk-option value: flag, number, or text.
using OptionValue = std::variant<bool, double, std::string>;

// Shortest decimal form that round-trips: 7 -> "7", 4.5 -> "4.5",
// 100 -> "100". Integral doubles never grow a decimal point.
std::string format_number(double value);

// Insertion-ordered map of chunk-option key -> value. Keys are unique;
// overwriting a key keeps its original position.
class OptionSet {
public:
    using Entry = std::pair<std::string, OptionValue>;
    using const_iterator = std::vector<Entry>::const_iterator;

    OptionSet() = default;
    OptionSet(std::initializer_list<Entry> entries);

    // Inserts a new key at the end or overwrites an existing one in
    // place. Throws std::invalid_argument when the key is not valid.
    void set(std::string key, OptionValue value);

    const OptionValue* find(std::string_view key) const;
    bool contains(std::string_view key) const { return find(key) != nullptr; }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const_iterator begin() const { return entries_.begin(); }
    const_iterator end() const { return entries_.end(); }

    // Non-empty, no whitespace, ',' or '='.
    static bool valid_key(std::string_view key);

    friend bool operator==(const OptionSet&, const OptionSet&) = default;

private:
    std::vector<Entry> entries_;
};

} // namespace litdoc
