#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace litdoc {

struct FrontMatterEntry;

// Scalar front-matter value. Strings are quoted on render only when a
// plain scalar would change meaning; bools and numbers render bare.
using FrontMatterScalar = std::variant<std::string, bool, double>;

using FrontMatterValue =
    std::variant<FrontMatterScalar, std::vector<FrontMatterEntry>>;

struct FrontMatterEntry {
    std::string key;
    FrontMatterValue value;
};

using FrontMatterExtras = std::vector<std::pair<std::string, FrontMatterScalar>>;

// Ordered document header rendered between `---` fences.
struct FrontMatter {
    std::vector<FrontMatterEntry> entries;

    // Appends an entry; throws Error when the key is already present.
    void append(std::string key, FrontMatterValue value);

    // Lines "---", one per entry (nested entries indent two spaces per
    // level), "---".
    std::vector<std::string> render() const;
};

// title, author?, date?, extra pairs, output. A scalar is single-quoted
// iff it would otherwise parse as a number, boolean or null, or begins
// with a YAML indicator character, so date "1973" renders as '1973'
// while prose titles stay plain.
FrontMatter rmarkdown_header(const std::string& title,
                             const std::optional<std::string>& author = {},
                             const std::optional<std::string>& date = {},
                             const std::string& output_format = "html_document",
                             const FrontMatterExtras& extra = {});

// title, extra pairs, then the workflowr site/output block.
FrontMatter workflowr_header(const std::string& title,
                             const FrontMatterExtras& extra = {});

// Same field ordering as rmarkdown_header with output
// "ioslides_presentation".
FrontMatter ioslides_header(const std::string& title,
                            const std::optional<std::string>& author = {},
                            const std::optional<std::string>& date = {},
                            const FrontMatterExtras& extra = {});

} // namespace litdoc
