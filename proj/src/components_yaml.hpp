#pragma once

#include <span>
#include <string>

#include <yaml-cpp/yaml.h>

#include "litdoc/tree.hpp"

namespace litdoc::detail {

// Builds the component tree from a parsed `components` mapping. Schema
// problems throw Error; tree invariants are the caller's to check via
// validate_tree.
ComponentNode components_from_node(const YAML::Node& node);

// Reads a YAML mapping of chunk options with typed scalar values.
// `where` prefixes every error message.
OptionSet option_set_from_node(const YAML::Node& node, const std::string& where);

std::string describe_violations(std::span<const Violation> violations);

} // namespace litdoc::detail
