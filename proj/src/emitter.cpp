#include "litdoc/emitter.hpp"

#include <string>
#include <vector>

#include "litdoc/error.hpp"
#include "litdoc/front_matter.hpp"
#include "text_util.hpp"

namespace litdoc {

namespace {

std::string header_value(const OptionValue& value) {
    if (const bool* b = std::get_if<bool>(&value)) {
        return *b ? "TRUE" : "FALSE";
    }
    if (const double* d = std::get_if<double>(&value)) {
        return format_number(*d);
    }
    std::string out = "\"";
    for (char c : std::get<std::string>(value)) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string substitute_placeholder(std::string_view tmpl, std::string_view text,
                                   const std::string& what) {
    std::size_t pos = tmpl.find("{}");
    if (pos == std::string_view::npos ||
        tmpl.find("{}", pos + 2) != std::string_view::npos) {
        throw Error(what + " must contain exactly one {} placeholder");
    }
    std::string out(tmpl.substr(0, pos));
    out += text;
    out += tmpl.substr(pos + 2);
    return out;
}

FrontMatter build_front_matter(const DocumentInfo& doc) {
    switch (doc.flavor) {
    case Flavor::Rmarkdown:
        return rmarkdown_header(doc.title, doc.author, doc.date,
                                "html_document", doc.extra);
    case Flavor::Ioslides:
        return ioslides_header(doc.title, doc.author, doc.date, doc.extra);
    case Flavor::Workflowr: {
        // workflowr pages keep author/date ahead of any other extras.
        FrontMatterExtras extras;
        if (doc.author) {
            extras.emplace_back("author", FrontMatterScalar{*doc.author});
        }
        if (doc.date) {
            extras.emplace_back("date", FrontMatterScalar{*doc.date});
        }
        extras.insert(extras.end(), doc.extra.begin(), doc.extra.end());
        return workflowr_header(doc.title, extras);
    }
    }
    throw Error("unknown flavor");
}

void append_lines(std::vector<std::string>& out, std::vector<std::string> more) {
    for (auto& line : more) {
        out.push_back(std::move(line));
    }
}

void emit_nodes(const std::vector<ComponentNode>& nodes, int depth,
                std::vector<std::string>& path, const GeneratorConfig& config,
                std::vector<std::string>& lines) {
    for (const ComponentNode& node : nodes) {
        path.push_back(node.name);
        if (depth > 6) {
            std::string where;
            for (const auto& seg : path) {
                where += "/" + seg;
            }
            throw Error("heading depth exceeds 6 at \"" + where + "\"");
        }
        lines.push_back("");
        lines.push_back(std::string(static_cast<std::size_t>(depth), '#') +
                        " " + node.name);
        if (node.is_section()) {
            emit_nodes(node.children, depth + 1, path, config, lines);
        } else if (const Decorator* dec =
                       resolve_decorator(node.type_tags, config)) {
            const OptionSet* dec_opts = decorator_opts_for(node.type_tags, config);
            OptionSet merged =
                merge_chunk_opts(config.doc_opts,
                                 dec_opts ? *dec_opts : OptionSet{},
                                 node.adhoc_opts);
            std::string body =
                apply_decorator(*dec, emit_accessor(path, config.root_var));
            lines.push_back("");
            append_lines(lines, ChunkBlock{config.chunk_lang, std::move(merged),
                                           textutil::split_lines(body)}
                                    .render());
        }
        path.pop_back();
    }
}

} // namespace

std::vector<std::string> ChunkBlock::render() const {
    std::vector<std::string> lines;
    lines.push_back("```" + format_chunk_header(lang, header_opts));
    for (const std::string& line : body_lines) {
        if (line.rfind("```", 0) == 0) {
            throw Error("chunk body line would terminate the fence: " + line);
        }
        lines.push_back(line);
    }
    lines.push_back("```");
    return lines;
}

std::string format_chunk_header(std::string_view lang, const OptionSet& opts) {
    std::string out = "{";
    out += lang;
    bool first = true;
    for (const auto& [key, value] : opts) {
        out += first ? " " : ", ";
        first = false;
        out += key + " = " + header_value(value);
    }
    out += "}";
    return out;
}

std::string emit_accessor(std::span<const std::string> path,
                          std::string_view root_var) {
    std::string out(root_var);
    for (const std::string& segment : path) {
        out += "$";
        if (textutil::plain_r_name(segment)) {
            out += segment;
        } else {
            out += "`" + segment + "`";
        }
    }
    return out;
}

std::string apply_decorator(const Decorator& decorator,
                            std::string_view accessor) {
    return substitute_placeholder(decorator.wrapper, accessor,
                                  "decorator wrapper");
}

const Decorator* resolve_decorator(std::span<const std::string> type_tags,
                                   const GeneratorConfig& config) {
    for (const Decorator& dec : config.decorators) {
        for (const std::string& tag : type_tags) {
            if (dec.tag == tag) {
                return &dec;
            }
        }
    }
    return config.default_decorator ? &*config.default_decorator : nullptr;
}

const OptionSet* decorator_opts_for(std::span<const std::string> type_tags,
                                    const GeneratorConfig& config) {
    for (const auto& [tag, opts] : config.decorator_opts) {
        for (const std::string& t : type_tags) {
            if (tag == t) {
                return &opts;
            }
        }
    }
    return nullptr;
}

OptionSet merge_chunk_opts(const OptionSet& doc, const OptionSet& dec,
                           const OptionSet& adhoc) {
    OptionSet merged = doc;
    for (const auto& [key, value] : dec) {
        merged.set(key, value);
    }
    for (const auto& [key, value] : adhoc) {
        merged.set(key, value);
    }
    return merged;
}

std::vector<std::string> emit_setup_chunk(const GeneratorConfig& config) {
    std::vector<std::string> body;
    if (!config.imports.empty()) {
        for (const std::string& import : config.imports) {
            body.push_back(substitute_placeholder(config.import_template,
                                                  import, "import template"));
        }
        body.push_back("");
    }
    body.push_back(config.root_var + " <- " + config.load_expr);
    if (!config.init_block.empty()) {
        body.push_back("");
        for (const std::string& line : config.init_block) {
            body.push_back(line);
        }
    }
    return ChunkBlock{config.chunk_lang, config.doc_opts, std::move(body)}
        .render();
}

std::vector<std::string> emit_document(const Manifest& manifest) {
    std::vector<std::string> lines = build_front_matter(manifest.document).render();
    lines.push_back("");
    append_lines(lines, emit_setup_chunk(manifest.generator));
    std::vector<std::string> path;
    emit_nodes(manifest.root.children, 1, path, manifest.generator, lines);
    return lines;
}

} // namespace litdoc
