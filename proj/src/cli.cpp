#include "litdoc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "litdoc/emitter.hpp"
#include "litdoc/error.hpp"
#include "litdoc/manifest.hpp"
#include "litdoc/tree.hpp"

namespace litdoc {

namespace {

bool read_file(const std::string& path, std::string& text, std::ostream& err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "cannot read " << path << "\n";
        return false;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) {
        err << "cannot read " << path << "\n";
        return false;
    }
    text = buffer.str();
    return true;
}

std::string default_output_path(const std::string& manifest_path,
                                const std::string& chunk_lang) {
    std::filesystem::path path(manifest_path);
    path.replace_extension(chunk_lang == "r" ? ".Rmd" : ".md");
    return path.string();
}

// Loads and strictly parses the manifest. Returns false with the exit
// code in `code` on failure.
bool load_manifest(const std::string& path, Manifest& manifest,
                   std::ostream& err, int& code) {
    std::string text;
    if (!read_file(path, text, err)) {
        code = kExitIo;
        return false;
    }
    try {
        manifest = parse_manifest(text);
    } catch (const Error& e) {
        err << e.what() << "\n";
        code = kExitInvalid;
        return false;
    }
    return true;
}

void apply_overrides(const CliInvocation& invocation, Manifest& manifest) {
    if (invocation.title) {
        manifest.document.title = *invocation.title;
    }
    if (invocation.author) {
        manifest.document.author = *invocation.author;
    }
    if (invocation.date) {
        manifest.document.date = *invocation.date;
    }
    if (invocation.flavor) {
        manifest.document.flavor = flavor_from_name(*invocation.flavor);
    }
}

} // namespace

int cmd_generate(const CliInvocation& invocation, std::ostream& out,
                 std::ostream& err) {
    Manifest manifest;
    int code = kExitOk;
    if (!load_manifest(invocation.manifest_path, manifest, err, code)) {
        return code;
    }
    std::vector<std::string> lines;
    try {
        apply_overrides(invocation, manifest);
        lines = emit_document(manifest);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }
    const std::string path = invocation.output_path.value_or(
        default_output_path(invocation.manifest_path,
                            manifest.generator.chunk_lang));
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "cannot write " << path << "\n";
        return kExitIo;
    }
    for (const std::string& line : lines) {
        file << line << '\n';
    }
    file.flush();
    if (!file) {
        err << "cannot write " << path << "\n";
        return kExitIo;
    }
    out << path << "\n";
    return kExitOk;
}

int cmd_tree(const CliInvocation& invocation, std::ostream& out,
             std::ostream& err) {
    Manifest manifest;
    int code = kExitOk;
    if (!load_manifest(invocation.manifest_path, manifest, err, code)) {
        return code;
    }
    out << render_dendrogram(manifest.root, manifest.root_label) << "\n";
    return kExitOk;
}

int cmd_validate(const CliInvocation& invocation, std::ostream& out,
                 std::ostream& err) {
    std::string text;
    if (!read_file(invocation.manifest_path, text, err)) {
        return kExitIo;
    }
    ParsedManifest parsed;
    try {
        parsed = parse_manifest_report(text);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitInvalid;
    }
    if (!parsed.violations.empty()) {
        for (const Violation& violation : parsed.violations) {
            err << violation.path << "  " << violation.rule << "  "
                << violation.message << "\n";
        }
        return kExitInvalid;
    }
    out << "OK\n";
    return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Generate literate documents from a YAML manifest"};
    app.name("litdoc");
    app.require_subcommand(1);

    CliInvocation invocation;
    std::string output_path;
    std::string title;
    std::string author;
    std::string date;
    std::string flavor;

    CLI::App* generate =
        app.add_subcommand("generate", "Write the document for a manifest");
    generate->add_option("manifest", invocation.manifest_path, "manifest file")
        ->required();
    CLI::Option* opt_output =
        generate->add_option("-o,--output", output_path, "output file");
    CLI::Option* opt_title =
        generate->add_option("--title", title, "override document title");
    CLI::Option* opt_author =
        generate->add_option("--author", author, "override document author");
    CLI::Option* opt_date =
        generate->add_option("--date", date, "override document date");
    CLI::Option* opt_flavor = generate->add_option(
        "--flavor", flavor, "override flavor (rmarkdown|workflowr|ioslides)");

    CLI::App* tree =
        app.add_subcommand("tree", "Print the component tree as a dendrogram");
    std::string tree_manifest;
    tree->add_option("manifest", tree_manifest, "manifest file")->required();

    CLI::App* validate =
        app.add_subcommand("validate", "Check a manifest and its tree");
    std::string validate_manifest;
    validate->add_option("manifest", validate_manifest, "manifest file")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("litdoc");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    if (generate->parsed()) {
        invocation.command = CliInvocation::Command::Generate;
        if (opt_output->count() > 0) {
            invocation.output_path = output_path;
        }
        if (opt_title->count() > 0) {
            invocation.title = title;
        }
        if (opt_author->count() > 0) {
            invocation.author = author;
        }
        if (opt_date->count() > 0) {
            invocation.date = date;
        }
        if (opt_flavor->count() > 0) {
            invocation.flavor = flavor;
        }
        return cmd_generate(invocation, out, err);
    }
    if (tree->parsed()) {
        invocation.command = CliInvocation::Command::Tree;
        invocation.manifest_path = tree_manifest;
        return cmd_tree(invocation, out, err);
    }
    invocation.command = CliInvocation::Command::Validate;
    invocation.manifest_path = validate_manifest;
    return cmd_validate(invocation, out, err);
}

} // namespace litdoc
