#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litdoc/manifest.hpp"
#include "litdoc/options.hpp"

namespace litdoc {

// One fenced code chunk: ```{<lang> <opts>} ... ```
struct ChunkBlock {
    std::string lang;
    OptionSet header_opts;
    std::vector<std::string> body_lines;

    // Fence-open line, body, fence-close. Throws Error if a body line
    // would terminate the fence early.
    std::vector<std::string> render() const;
};

// "{r}" when opts is empty, else "{r k1 = v1, k2 = v2}" in OptionSet
// order. Booleans render TRUE/FALSE, numbers in shortest decimal form,
// text double-quoted with '"' and '\' escaped.
std::string format_chunk_header(std::string_view lang, const OptionSet& opts);

// root_var followed by one $<segment> per path element; a segment is
// backtick-wrapped iff it is not of identifier form
// [A-Za-z.][A-Za-z0-9._]*.
std::string emit_accessor(std::span<const std::string> path,
                          std::string_view root_var);

// Substitutes the accessor into the wrapper's single {} placeholder.
std::string apply_decorator(const Decorator& decorator, std::string_view accessor);

// Scans config.decorators in declaration order and returns the first
// whose tag occurs anywhere in `type_tags`; falls back to the default
// decorator. nullptr means the component is suppressed.
const Decorator* resolve_decorator(std::span<const std::string> type_tags,
                                   const GeneratorConfig& config);

// Same sequential scan over config.decorator_opts; nullptr when no tag
// matches.
const OptionSet* decorator_opts_for(std::span<const std::string> type_tags,
                                    const GeneratorConfig& config);

// Three-tier merge. Key order is first appearance scanning doc, then
// dec, then adhoc; the value comes from the highest-priority tier
// holding the key (adhoc > dec > doc). Overriding never moves a key.
OptionSet merge_chunk_opts(const OptionSet& doc, const OptionSet& dec,
                           const OptionSet& adhoc);

// The document's first chunk: imports, the load assignment, and the
// verbatim init block, under the document-wide options.
std::vector<std::string> emit_setup_chunk(const GeneratorConfig& config);

// Front matter, setup chunk, then a depth-first descent of the tree:
// a heading per named node and a decorated chunk per non-suppressed
// leaf. Byte-deterministic. Throws Error when a heading would exceed
// depth 6.
std::vector<std::string> emit_document(const Manifest& manifest);

} // namespace litdoc
