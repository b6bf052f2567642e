#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "litdoc/front_matter.hpp"
#include "litdoc/options.hpp"
#include "litdoc/tree.hpp"

namespace litdoc {

// A named expression template wrapping a component accessor. `wrapper`
// contains exactly one `{}` placeholder; the identity decorator's
// wrapper is "{}" and emits the bare accessor.
struct Decorator {
    std::string tag;     // type tag this decorator handles
    std::string wrapper; // e.g. "datatable({})"

    static Decorator identity() { return {"", "{}"}; }
    // Shorthand: a bare function name f expands to "f({})".
    static Decorator named(std::string tag, const std::string& function_name);

    friend bool operator==(const Decorator&, const Decorator&) = default;
};

// Everything the generator needs besides the component tree.
struct GeneratorConfig {
    std::string chunk_lang = "r";
    std::vector<std::string> imports;
    std::string import_template = "library({})";
    std::string load_expr; // expression whose result is the component list
    std::string root_var = "cc_list";
    std::vector<std::string> init_block; // emitted verbatim
    OptionSet doc_opts;
    std::vector<Decorator> decorators;
    std::vector<std::pair<std::string, OptionSet>> decorator_opts;
    // nullopt suppresses leaves whose tags match no decorator.
    std::optional<Decorator> default_decorator = Decorator::identity();
};

enum class Flavor { Rmarkdown, Workflowr, Ioslides };

// "rmarkdown" | "workflowr" | "ioslides"; throws Error otherwise.
Flavor flavor_from_name(const std::string& name);
std::string flavor_name(Flavor flavor);

struct DocumentInfo {
    Flavor flavor = Flavor::Rmarkdown;
    std::string title;
    std::optional<std::string> author;
    std::optional<std::string> date;
    FrontMatterExtras extra;
};

struct Manifest {
    DocumentInfo document;
    GeneratorConfig generator;
    ComponentNode root;     // unnamed; children are the top-level sections
    std::string root_label; // used by the dendrogram
};

// Result of the collecting parse: schema and syntax problems still
// throw, but tree-invariant violations are returned as data so callers
// can report all of them.
struct ParsedManifest {
    Manifest manifest;
    std::vector<Violation> violations;
};

ParsedManifest parse_manifest_report(const std::string& yaml_text);

// Strict parse: throws Error on any syntax, schema, or tree-invariant
// problem. Defaults are applied (chunk_lang "r", root_var "cc_list",
// identity default decorator, root_label = root_var).
Manifest parse_manifest(const std::string& yaml_text);

} // namespace litdoc
