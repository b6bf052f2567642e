#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace litdoc {

// Exit codes: 0 success, 1 semantic/validation error, 2 environment or
// I/O error. Nothing else is ever returned.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

struct CliInvocation {
    enum class Command { Generate, Tree, Validate };

    Command command = Command::Generate;
    std::string manifest_path;
    std::optional<std::string> output_path; // generate only
    // Front-matter overrides, generate only.
    std::optional<std::string> title;
    std::optional<std::string> author;
    std::optional<std::string> date;
    std::optional<std::string> flavor;
};

// Writes the generated document to the output path (default: manifest
// path with extension .Rmd when chunk_lang is "r", else .md) and prints
// that path on `out`.
int cmd_generate(const CliInvocation& invocation, std::ostream& out,
                 std::ostream& err);

// Prints the dendrogram on `out`.
int cmd_tree(const CliInvocation& invocation, std::ostream& out,
             std::ostream& err);

// Prints "OK" on `out`, or one line per violation (path, rule, message)
// on `err`.
int cmd_validate(const CliInvocation& invocation, std::ostream& out,
                 std::ostream& err);

// Parses `args` (program name excluded) and dispatches. All diagnostics
// go to `err`; generated content and dendrograms go to `out` or the
// target file only.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace litdoc
