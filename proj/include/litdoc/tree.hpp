#pragma once

#include <string>
#include <vector>

#include "litdoc/options.hpp"

namespace litdoc {

// One element of the component tree. Sections carry children, leaves
// carry type tags and optional per-chunk options. The tree root is an
// unnamed section whose children are the document's top-level sections.
//
// Node names land verbatim in headings and may carry pandoc attributes
// ("Overall {.tabset}"). Backtick, newline and '$' are rejected because
// they cannot be escaped in the accessor syntax.
struct ComponentNode {
    enum class Kind { Section, Leaf };

    std::string name; // empty only on the root
    Kind kind = Kind::Section;
    std::vector<std::string> type_tags;  // leaves only, most specific first
    std::vector<ComponentNode> children; // sections only
    OptionSet adhoc_opts;                // leaves only

    bool is_leaf() const { return kind == Kind::Leaf; }
    bool is_section() const { return kind == Kind::Section; }

    static ComponentNode leaf(std::string name, std::vector<std::string> tags,
                              OptionSet opts = {});
    static ComponentNode section(std::string name,
                                 std::vector<ComponentNode> children);
    static ComponentNode root(std::vector<ComponentNode> children = {});

    friend bool operator==(const ComponentNode&, const ComponentNode&) = default;
};

// One broken tree invariant. `path` is the /-joined chain of node names
// from the root, e.g. "/Survival Plots/Data".
struct Violation {
    std::string path;
    std::string rule; // e.g. "duplicate-sibling-name"
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks every node invariant and reports all violations; an empty
// result means the tree is valid. Pure: equal inputs give equal lists.
std::vector<Violation> validate_tree(const ComponentNode& root);

// Returns the leaf with `opts` merged into its ad-hoc options, new keys
// appended and existing keys overwritten. Throws Error when `node` is a
// section: ad-hoc options govern a single chunk.
ComponentNode attach_chunk_opts(ComponentNode node, const OptionSet& opts);

// Renders the tree as YAML. Sections nest; each leaf carries its `tags`
// list and, when non-empty, `chunk_opts`. The first line is a comment
// naming `root_label`. parse_components() restores the tree exactly.
std::string serialize_tree(const ComponentNode& root, const std::string& root_label);

// Parses a components mapping (the manifest's `components` block or
// serialize_tree output) into a validated tree. Throws Error on syntax,
// schema, or invariant problems.
ComponentNode parse_components(const std::string& yaml_text);

// ASCII tree, one line per named node plus one
// "o-- object of type(s):<tags>" line per leaf. Siblings are marked
// "|--" except the last, which gets "o--"; a child's prefix extends the
// parent's by "|  " under a non-last parent and by three spaces under a
// last one. No line carries trailing whitespace.
std::string render_dendrogram(const ComponentNode& root, const std::string& root_label);

} // namespace litdoc
