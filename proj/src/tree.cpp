#include "litdoc/tree.hpp"

#include <cctype>
#include <set>
#include <utility>

#include "components_yaml.hpp"
#include "litdoc/error.hpp"
#include "text_util.hpp"
#include "yaml_util.hpp"

namespace litdoc {

namespace {

bool has_forbidden_char(std::string_view name) {
    return name.find_first_of("`\n\r$") != std::string_view::npos;
}

std::string child_path(const std::string& parent, const std::string& name) {
    return parent + "/" + name;
}

void check_node(const ComponentNode& node, const std::string& path,
                std::vector<Violation>& out);

void check_children(const ComponentNode& node, const std::string& path,
                    std::vector<Violation>& out) {
    std::set<std::string, std::less<>> seen;
    for (const auto& child : node.children) {
        std::string trimmed(textutil::trim(child.name));
        if (!trimmed.empty() && !seen.insert(trimmed).second) {
            out.push_back({child_path(path, child.name), "duplicate-sibling-name",
                           "sibling name \"" + trimmed + "\" appears more than once"});
        }
        check_node(child, child_path(path, child.name), out);
    }
}

void check_node(const ComponentNode& node, const std::string& path,
                std::vector<Violation>& out) {
    if (textutil::trim(node.name).empty()) {
        out.push_back({path, "empty-name", "node name is empty"});
    }
    if (has_forbidden_char(node.name)) {
        out.push_back({path, "forbidden-character",
                       "name contains backtick, newline, or '$'"});
    }
    if (node.is_section()) {
        if (!node.type_tags.empty()) {
            out.push_back({path, "tags-on-section",
                           "type tags are permitted only on leaves"});
        }
        if (!node.adhoc_opts.empty()) {
            out.push_back({path, "options-on-section",
                           "ad-hoc chunk options are permitted only on leaves"});
        }
        if (node.children.empty()) {
            out.push_back({path, "empty-section", "section has no children"});
        }
        check_children(node, path, out);
    } else {
        if (!node.children.empty()) {
            out.push_back({path, "children-on-leaf", "leaf has children"});
        }
        std::set<std::string_view> seen;
        for (const auto& tag : node.type_tags) {
            if (tag.empty()) {
                out.push_back({path, "empty-tag", "type tag is empty"});
            } else if (!seen.insert(tag).second) {
                out.push_back({path, "duplicate-tag",
                               "type tag \"" + tag + "\" appears more than once"});
            }
        }
    }
}

// --- YAML emission ---------------------------------------------------

// Safe as a plain scalar in both block and flow context.
bool plain_safe(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    unsigned char first = static_cast<unsigned char>(text.front());
    if (!std::isalnum(first) && first != '_') {
        return false;
    }
    if (text.back() == ' ') {
        return false;
    }
    for (unsigned char c : text) {
        if (!std::isalnum(c) && c != '.' && c != '_' && c != '-' && c != ' ') {
            return false;
        }
    }
    return true;
}

bool plain_option_key(std::string_view key) {
    if (key.empty()) {
        return false;
    }
    for (unsigned char c : key) {
        if (!std::isalnum(c) && c != '.' && c != '_' && c != '-') {
            return false;
        }
    }
    return true;
}

std::string double_quoted(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c; break;
        }
    }
    out += '"';
    return out;
}

std::string yaml_key(const std::string& name) {
    return plain_safe(name) ? name : double_quoted(name);
}

std::string yaml_option_value(const OptionValue& value) {
    if (const bool* b = std::get_if<bool>(&value)) {
        return *b ? "true" : "false";
    }
    if (const double* d = std::get_if<double>(&value)) {
        return format_number(*d);
    }
    // Text stays double-quoted so it parses back as text.
    return double_quoted(std::get<std::string>(value));
}

void emit_node(const ComponentNode& node, int indent, std::string& out) {
    // These two names select the leaf schema when read back.
    if (node.name == "tags" || node.name == "chunk_opts") {
        throw Error("component name \"" + node.name +
                    "\" collides with a leaf schema key");
    }
    std::string pad(indent, ' ');
    out += pad + yaml_key(node.name) + ":\n";
    if (node.is_section()) {
        for (const auto& child : node.children) {
            emit_node(child, indent + 2, out);
        }
        return;
    }
    out += pad + "  tags: [";
    for (std::size_t i = 0; i < node.type_tags.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        const std::string& tag = node.type_tags[i];
        out += plain_safe(tag) ? tag : double_quoted(tag);
    }
    out += "]\n";
    if (!node.adhoc_opts.empty()) {
        out += pad + "  chunk_opts: {";
        bool first = true;
        for (const auto& [key, value] : node.adhoc_opts) {
            if (!first) {
                out += ", ";
            }
            first = false;
            out += (plain_option_key(key) ? key : double_quoted(key)) + ": " +
                   yaml_option_value(value);
        }
        out += "}\n";
    }
}

// --- Dendrogram ------------------------------------------------------

void dendro_walk(const std::vector<ComponentNode>& siblings,
                 const std::string& prefix, std::vector<std::string>& lines) {
    for (std::size_t i = 0; i < siblings.size(); ++i) {
        const ComponentNode& node = siblings[i];
        bool last = (i + 1 == siblings.size());
        lines.push_back(prefix + (last ? "o-- " : "|-- ") + node.name);
        std::string next = prefix + (last ? "   " : "|  ");
        if (node.is_leaf()) {
            std::string tags;
            for (std::size_t t = 0; t < node.type_tags.size(); ++t) {
                if (t > 0) {
                    tags += ' ';
                }
                tags += node.type_tags[t];
            }
            lines.push_back(next + "o-- object of type(s):" + tags);
        } else {
            dendro_walk(node.children, next, lines);
        }
    }
}

} // namespace

ComponentNode ComponentNode::leaf(std::string name, std::vector<std::string> tags,
                                  OptionSet opts) {
    ComponentNode node;
    node.name = std::move(name);
    node.kind = Kind::Leaf;
    node.type_tags = std::move(tags);
    node.adhoc_opts = std::move(opts);
    return node;
}

ComponentNode ComponentNode::section(std::string name,
                                     std::vector<ComponentNode> children) {
    ComponentNode node;
    node.name = std::move(name);
    node.kind = Kind::Section;
    node.children = std::move(children);
    return node;
}

ComponentNode ComponentNode::root(std::vector<ComponentNode> children) {
    ComponentNode node;
    node.kind = Kind::Section;
    node.children = std::move(children);
    return node;
}

std::vector<Violation> validate_tree(const ComponentNode& root) {
    std::vector<Violation> out;
    if (!root.name.empty() || root.is_leaf() || !root.type_tags.empty() ||
        !root.adhoc_opts.empty()) {
        out.push_back({"/", "root-shape",
                       "root must be an unnamed section without tags or options"});
    }
    check_children(root, "", out);
    return out;
}

ComponentNode attach_chunk_opts(ComponentNode node, const OptionSet& opts) {
    if (node.is_section()) {
        throw Error("cannot attach chunk options to section \"" + node.name +
                    "\": ad-hoc options govern a single chunk");
    }
    for (const auto& [key, value] : opts) {
        node.adhoc_opts.set(key, value);
    }
    return node;
}

std::string serialize_tree(const ComponentNode& root, const std::string& root_label) {
    std::string out = "# " + root_label + "\n";
    if (root.children.empty()) {
        out += "{}\n";
        return out;
    }
    for (const auto& child : root.children) {
        emit_node(child, 0, out);
    }
    return out;
}

ComponentNode parse_components(const std::string& yaml_text) {
    YAML::Node doc = yamlutil::load(yaml_text);
    ComponentNode root = detail::components_from_node(doc);
    auto violations = validate_tree(root);
    if (!violations.empty()) {
        throw Error(detail::describe_violations(violations));
    }
    return root;
}

std::string render_dendrogram(const ComponentNode& root, const std::string& root_label) {
    std::vector<std::string> lines{root_label};
    dendro_walk(root.children, "  ", lines);
    return textutil::join_lines(lines);
}

} // namespace litdoc
