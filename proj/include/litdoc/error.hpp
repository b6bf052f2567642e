#pragma once

#include <stdexcept>
#include <string>

namespace litdoc {

// Raised for manifest syntax/schema problems, broken tree invariants
// surfaced through the strict parse path, and emission failures.
// File I/O errors are reported by callers, not through this type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace litdoc
