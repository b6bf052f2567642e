#pragma once

#include <string>
#include <string_view>

#include <yaml-cpp/yaml.h>

#include "litdoc/error.hpp"
#include "litdoc/options.hpp"
#include "text_util.hpp"

namespace litdoc::yamlutil {

// Loads one YAML document, translating parser failures into Error with
// a 1-based line/column position.
inline YAML::Node load(const std::string& text) {
    try {
        return YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw Error("syntax error at line " + std::to_string(e.mark.line + 1) +
                    ", column " + std::to_string(e.mark.column + 1) + ": " +
                    e.msg);
    } catch (const YAML::Exception& e) {
        throw Error(std::string("syntax error: ") + e.what());
    }
}

// yaml-cpp marks single- and double-quoted scalars with tag "!".
inline bool is_quoted(const YAML::Node& node) { return node.Tag() == "!"; }

// Typed option value: quoted scalars are always text; plain scalars
// resolve to bool (true/false spellings), then number, then text.
inline OptionValue typed_scalar(const YAML::Node& node) {
    const std::string& s = node.Scalar();
    if (is_quoted(node)) {
        return s;
    }
    if (s == "true" || s == "True" || s == "TRUE") {
        return true;
    }
    if (s == "false" || s == "False" || s == "FALSE") {
        return false;
    }
    double d = 0.0;
    if (textutil::parse_full_double(s, d)) {
        return d;
    }
    return s;
}

} // namespace litdoc::yamlutil
