#include "components_yaml.hpp"

#include <set>
#include <string>
#include <string_view>

#include "litdoc/error.hpp"
#include "yaml_util.hpp"

namespace litdoc::detail {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw Error("component \"" + path + "\": " + message);
}

std::vector<std::string> read_tags(const YAML::Node& node, const std::string& path) {
    if (!node.IsSequence()) {
        fail(path, "tags must be a sequence of text");
    }
    std::vector<std::string> tags;
    for (const auto& item : node) {
        if (!item.IsScalar()) {
            fail(path, "tags must be a sequence of text");
        }
        tags.push_back(item.Scalar());
    }
    return tags;
}

bool has_key(const YAML::Node& map, std::string_view key) {
    for (const auto& kv : map) {
        if (kv.first.IsScalar() && kv.first.Scalar() == key) {
            return true;
        }
    }
    return false;
}

ComponentNode read_leaf(const std::string& name, const YAML::Node& map,
                        const std::string& path) {
    std::vector<std::string> tags;
    OptionSet opts;
    std::set<std::string> seen;
    for (const auto& kv : map) {
        const std::string key = kv.first.IsScalar() ? kv.first.Scalar() : std::string();
        if (!seen.insert(key).second) {
            fail(path, "duplicate key \"" + key + "\"");
        }
        if (key == "tags") {
            tags = read_tags(kv.second, path);
        } else if (key == "chunk_opts") {
            opts = option_set_from_node(kv.second,
                                        "component \"" + path + "\": chunk_opts");
        } else {
            fail(path, "unknown key \"" + key +
                           "\" in leaf (expected tags and optional chunk_opts)");
        }
    }
    return ComponentNode::leaf(name, std::move(tags), std::move(opts));
}

std::vector<ComponentNode> read_children(const YAML::Node& map,
                                         const std::string& path) {
    std::vector<ComponentNode> children;
    for (const auto& kv : map) {
        if (!kv.first.IsScalar()) {
            throw Error("component \"" + path +
                        "\": component names must be scalar");
        }
        const std::string name = kv.first.Scalar();
        const std::string here = path + "/" + name;
        const YAML::Node& value = kv.second;
        if (!value.IsMap()) {
            throw Error("component \"" + here +
                        "\": must be a mapping (a leaf carries tags, a "
                        "section carries its children)");
        }
        if (has_key(value, "tags")) {
            children.push_back(read_leaf(name, value, here));
        } else {
            children.push_back(
                ComponentNode::section(name, read_children(value, here)));
        }
    }
    return children;
}

} // namespace

ComponentNode components_from_node(const YAML::Node& node) {
    if (!node.IsDefined() || node.IsNull()) {
        return ComponentNode::root();
    }
    if (!node.IsMap()) {
        throw Error("components must be a mapping");
    }
    return ComponentNode::root(read_children(node, ""));
}

OptionSet option_set_from_node(const YAML::Node& node, const std::string& where) {
    if (!node.IsMap()) {
        throw Error(where + " must be a mapping");
    }
    OptionSet opts;
    for (const auto& kv : node) {
        if (!kv.first.IsScalar()) {
            throw Error(where + ": option keys must be scalar");
        }
        const std::string key = kv.first.Scalar();
        if (!OptionSet::valid_key(key)) {
            throw Error(where + ": invalid option key \"" + key +
                        "\" (keys must be non-empty and contain no "
                        "whitespace, ',' or '=')");
        }
        if (opts.contains(key)) {
            throw Error(where + ": duplicate option key \"" + key + "\"");
        }
        if (!kv.second.IsScalar()) {
            throw Error(where + ": option \"" + key +
                        "\" must be a boolean, number, or text scalar");
        }
        opts.set(key, yamlutil::typed_scalar(kv.second));
    }
    return opts;
}

std::string describe_violations(std::span<const Violation> violations) {
    std::string out = "invalid component tree:";
    for (const auto& v : violations) {
        out += "\n  " + v.path + ": " + v.message + " [" + v.rule + "]";
    }
    return out;
}

} // namespace litdoc::detail
