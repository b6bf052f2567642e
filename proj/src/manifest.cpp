#include "litdoc/manifest.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "litdoc/error.hpp"
#include "components_yaml.hpp"
#include "text_util.hpp"
#include "yaml_util.hpp"

namespace litdoc {

namespace {

std::size_t count_placeholders(std::string_view text) {
    std::size_t n = 0;
    for (std::size_t pos = text.find("{}"); pos != std::string_view::npos;
         pos = text.find("{}", pos + 2)) {
        ++n;
    }
    return n;
}

// Any embedded line opening with ``` would break out of the emitted
// code fence, so reject it at the source.
void reject_fence_breakout(std::string_view text, const std::string& where) {
    for (const auto& line : textutil::split_lines(text)) {
        if (line.rfind("```", 0) == 0) {
            throw Error(where + ": a line starting with ``` would terminate "
                                "the surrounding code fence");
        }
    }
}

bool lang_form(std::string_view name) {
    if (name.empty()) {
        return false;
    }
    for (char c : name) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '+' || c == '.' || c == '_' ||
                  c == '#' || c == '-';
        if (!ok) {
            return false;
        }
    }
    return true;
}

bool extra_key_form(std::string_view key) {
    if (key.empty()) {
        return false;
    }
    for (char c : key) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::string scalar_or_throw(const YAML::Node& node, const std::string& where) {
    if (!node.IsScalar()) {
        throw Error(where + " must be a scalar");
    }
    return node.Scalar();
}

FrontMatterScalar to_front_matter_scalar(const OptionValue& value) {
    if (const bool* b = std::get_if<bool>(&value)) {
        return *b;
    }
    if (const double* d = std::get_if<double>(&value)) {
        return *d;
    }
    return std::get<std::string>(value);
}

Decorator decorator_from_scalar(const std::string& tag, const std::string& text,
                                const std::string& where) {
    if (textutil::trim(text).empty()) {
        throw Error(where + " must name a function or give an expression "
                            "template with one {} placeholder");
    }
    reject_fence_breakout(text, where);
    std::size_t placeholders = count_placeholders(text);
    if (placeholders == 0) {
        return Decorator::named(tag, text);
    }
    if (placeholders != 1) {
        throw Error(where + " must contain exactly one {} placeholder");
    }
    return Decorator{tag, text};
}

DocumentInfo read_document(const YAML::Node& node) {
    if (!node.IsMap()) {
        throw Error("document must be a mapping");
    }
    DocumentInfo info;
    bool have_title = false;
    std::set<std::string> seen;
    for (const auto& kv : node) {
        if (!kv.first.IsScalar()) {
            throw Error("document keys must be scalar");
        }
        const std::string key = kv.first.Scalar();
        if (!seen.insert(key).second) {
            throw Error("duplicate key \"" + key + "\" in document");
        }
        if (key == "flavor") {
            info.flavor =
                flavor_from_name(scalar_or_throw(kv.second, "document.flavor"));
        } else if (key == "title") {
            info.title = scalar_or_throw(kv.second, "document.title");
            have_title = true;
        } else if (key == "author") {
            info.author = scalar_or_throw(kv.second, "document.author");
        } else if (key == "date") {
            info.date = scalar_or_throw(kv.second, "document.date");
        } else {
            if (!extra_key_form(key)) {
                throw Error("invalid document key \"" + key +
                            "\" (letters, digits, '.', '_', '-')");
            }
            if (key == "output" || key == "site") {
                throw Error("document key \"" + key +
                            "\" is reserved for the output flavor");
            }
            if (!kv.second.IsScalar()) {
                throw Error("document." + key + " must be a scalar");
            }
            info.extra.emplace_back(
                key, to_front_matter_scalar(yamlutil::typed_scalar(kv.second)));
        }
    }
    if (!have_title) {
        throw Error("document.title is required");
    }
    if (info.title.empty()) {
        throw Error("document.title must be non-empty");
    }
    return info;
}

std::vector<std::string> read_string_sequence(const YAML::Node& node,
                                              const std::string& where) {
    if (!node.IsSequence()) {
        throw Error(where + " must be a sequence of text");
    }
    std::vector<std::string> items;
    for (const auto& item : node) {
        if (!item.IsScalar()) {
            throw Error(where + " must be a sequence of text");
        }
        items.push_back(item.Scalar());
    }
    return items;
}

// Accepts a single scalar or a sequence of scalars; every entry is
// further split on embedded newlines.
std::vector<std::string> read_lines(const YAML::Node& node,
                                    const std::string& where) {
    std::vector<std::string> pieces;
    if (node.IsScalar()) {
        pieces.push_back(node.Scalar());
    } else {
        pieces = read_string_sequence(node, where);
    }
    std::vector<std::string> lines;
    for (const auto& piece : pieces) {
        for (auto& line : textutil::split_lines(piece)) {
            lines.push_back(std::move(line));
        }
    }
    if (lines.size() == 1 && lines.front().empty()) {
        lines.clear();
    }
    return lines;
}

GeneratorConfig read_generator(const YAML::Node& node) {
    if (!node.IsMap()) {
        throw Error("generator must be a mapping");
    }
    GeneratorConfig cfg;
    bool have_load = false;
    std::set<std::string> seen;
    for (const auto& kv : node) {
        if (!kv.first.IsScalar()) {
            throw Error("generator keys must be scalar");
        }
        const std::string key = kv.first.Scalar();
        if (!seen.insert(key).second) {
            throw Error("duplicate key \"" + key + "\" in generator");
        }
        if (key == "chunk_lang") {
            cfg.chunk_lang = scalar_or_throw(kv.second, "generator.chunk_lang");
            if (!lang_form(cfg.chunk_lang)) {
                throw Error("generator.chunk_lang \"" + cfg.chunk_lang +
                            "\" is not a usable language name");
            }
        } else if (key == "imports") {
            cfg.imports = read_string_sequence(kv.second, "generator.imports");
            for (const auto& imp : cfg.imports) {
                if (textutil::trim(imp).empty()) {
                    throw Error("generator.imports entries must be non-empty");
                }
                reject_fence_breakout(imp, "generator.imports");
            }
        } else if (key == "import_template") {
            cfg.import_template =
                scalar_or_throw(kv.second, "generator.import_template");
            if (count_placeholders(cfg.import_template) != 1) {
                throw Error("generator.import_template must contain exactly "
                            "one {} placeholder");
            }
            reject_fence_breakout(cfg.import_template,
                                  "generator.import_template");
        } else if (key == "load_expr") {
            cfg.load_expr = scalar_or_throw(kv.second, "generator.load_expr");
            if (cfg.load_expr.find('\n') != std::string::npos) {
                throw Error("generator.load_expr must be a single line");
            }
            if (textutil::trim(cfg.load_expr).empty()) {
                throw Error("generator.load_expr must be non-empty");
            }
            reject_fence_breakout(cfg.load_expr, "generator.load_expr");
            have_load = true;
        } else if (key == "root_var") {
            cfg.root_var = scalar_or_throw(kv.second, "generator.root_var");
            if (!textutil::plain_r_name(cfg.root_var)) {
                throw Error("generator.root_var \"" + cfg.root_var +
                            "\" is not a plain identifier");
            }
        } else if (key == "init_block") {
            cfg.init_block = read_lines(kv.second, "generator.init_block");
            for (const auto& line : cfg.init_block) {
                reject_fence_breakout(line, "generator.init_block");
            }
        } else if (key == "chunk_opts") {
            cfg.doc_opts =
                detail::option_set_from_node(kv.second, "generator.chunk_opts");
        } else if (key == "decorators") {
            if (!kv.second.IsMap()) {
                throw Error("generator.decorators must be a mapping of "
                            "type tag to decorator");
            }
            for (const auto& entry : kv.second) {
                if (!entry.first.IsScalar()) {
                    throw Error("generator.decorators keys must be scalar");
                }
                const std::string tag = entry.first.Scalar();
                if (tag.empty()) {
                    throw Error("generator.decorators keys must be non-empty");
                }
                for (const auto& existing : cfg.decorators) {
                    if (existing.tag == tag) {
                        throw Error("duplicate decorator tag \"" + tag + "\"");
                    }
                }
                const std::string where = "generator.decorators[\"" + tag + "\"]";
                cfg.decorators.push_back(decorator_from_scalar(
                    tag, scalar_or_throw(entry.second, where), where));
            }
        } else if (key == "decorator_chunk_opts") {
            if (!kv.second.IsMap()) {
                throw Error("generator.decorator_chunk_opts must be a mapping "
                            "of type tag to chunk options");
            }
            for (const auto& entry : kv.second) {
                if (!entry.first.IsScalar()) {
                    throw Error(
                        "generator.decorator_chunk_opts keys must be scalar");
                }
                const std::string tag = entry.first.Scalar();
                for (const auto& existing : cfg.decorator_opts) {
                    if (existing.first == tag) {
                        throw Error("duplicate decorator_chunk_opts tag \"" +
                                    tag + "\"");
                    }
                }
                cfg.decorator_opts.emplace_back(
                    tag, detail::option_set_from_node(
                             entry.second, "generator.decorator_chunk_opts[\"" +
                                               tag + "\"]"));
            }
        } else if (key == "default_decorator") {
            const std::string text =
                scalar_or_throw(kv.second, "generator.default_decorator");
            if (text == "none") {
                cfg.default_decorator.reset();
            } else {
                cfg.default_decorator = decorator_from_scalar(
                    "", text, "generator.default_decorator");
            }
        } else {
            throw Error("unknown generator key \"" + key + "\"");
        }
    }
    if (!have_load) {
        throw Error("generator.load_expr is required");
    }
    return cfg;
}

} // namespace

Decorator Decorator::named(std::string tag, const std::string& function_name) {
    return {std::move(tag), function_name + "({})"};
}

Flavor flavor_from_name(const std::string& name) {
    if (name == "rmarkdown") {
        return Flavor::Rmarkdown;
    }
    if (name == "workflowr") {
        return Flavor::Workflowr;
    }
    if (name == "ioslides") {
        return Flavor::Ioslides;
    }
    throw Error("unknown flavor \"" + name +
                "\" (expected rmarkdown, workflowr, or ioslides)");
}

std::string flavor_name(Flavor flavor) {
    switch (flavor) {
    case Flavor::Rmarkdown:
        return "rmarkdown";
    case Flavor::Workflowr:
        return "workflowr";
    case Flavor::Ioslides:
        return "ioslides";
    }
    throw Error("unknown flavor");
}

ParsedManifest parse_manifest_report(const std::string& yaml_text) {
    YAML::Node doc = yamlutil::load(yaml_text);
    if (!doc.IsMap()) {
        throw Error("manifest must be a mapping with document, generator, "
                    "and components");
    }
    YAML::Node document_node;
    YAML::Node generator_node;
    YAML::Node components_node;
    bool have_document = false;
    bool have_generator = false;
    bool have_components = false;
    std::optional<std::string> root_label;
    std::set<std::string> seen;
    for (const auto& kv : doc) {
        if (!kv.first.IsScalar()) {
            throw Error("manifest keys must be scalar");
        }
        const std::string key = kv.first.Scalar();
        if (!seen.insert(key).second) {
            throw Error("duplicate top-level key \"" + key + "\"");
        }
        if (key == "document") {
            document_node = kv.second;
            have_document = true;
        } else if (key == "generator") {
            generator_node = kv.second;
            have_generator = true;
        } else if (key == "components") {
            components_node = kv.second;
            have_components = true;
        } else if (key == "root_label") {
            root_label = scalar_or_throw(kv.second, "root_label");
            if (root_label->empty()) {
                throw Error("root_label must be non-empty");
            }
        } else {
            throw Error("unknown top-level key \"" + key +
                        "\" (expected document, generator, components, "
                        "root_label)");
        }
    }
    if (!have_document) {
        throw Error("manifest is missing the document block");
    }
    if (!have_generator) {
        throw Error("manifest is missing the generator block");
    }
    if (!have_components) {
        throw Error("manifest is missing the components block");
    }

    ParsedManifest parsed;
    parsed.manifest.document = read_document(document_node);
    parsed.manifest.generator = read_generator(generator_node);
    parsed.manifest.root = detail::components_from_node(components_node);
    parsed.manifest.root_label =
        root_label.value_or(parsed.manifest.generator.root_var);
    parsed.violations = validate_tree(parsed.manifest.root);
    return parsed;
}

Manifest parse_manifest(const std::string& yaml_text) {
    ParsedManifest parsed = parse_manifest_report(yaml_text);
    if (!parsed.violations.empty()) {
        throw Error(detail::describe_violations(parsed.violations));
    }
    return std::move(parsed.manifest);
}

} // namespace litdoc
