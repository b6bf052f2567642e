#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "doctest.h"
#include "litdoc/error.hpp"
#include "litdoc/front_matter.hpp"

using litdoc::FrontMatter;
using litdoc::FrontMatterScalar;

namespace {

std::string joined(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace

TEST_CASE("rmarkdown header with title, author, date") {
    auto fm = litdoc::rmarkdown_header("Anscombe's Quartet",
                                       std::string("Francis Anscombe"),
                                       std::string("1973"));
    std::vector<std::string> expected = {
        "---",
        "title: Anscombe's Quartet",
        "author: Francis Anscombe",
        "date: '1973'",
        "output: html_document",
        "---",
    };
    CHECK(fm.render() == expected);
}

TEST_CASE("rmarkdown header with title only") {
    auto fm = litdoc::rmarkdown_header("Simple Trial Report");
    std::vector<std::string> expected = {
        "---",
        "title: Simple Trial Report",
        "output: html_document",
        "---",
    };
    CHECK(fm.render() == expected);
}

TEST_CASE("empty title is rejected") {
    CHECK_THROWS_AS(litdoc::rmarkdown_header(""), litdoc::Error);
    CHECK_THROWS_AS(litdoc::workflowr_header(""), litdoc::Error);
    CHECK_THROWS_AS(litdoc::ioslides_header(""), litdoc::Error);
}

TEST_CASE("workflowr header nests the output block") {
    auto fm = litdoc::workflowr_header("Analysis Site");
    std::vector<std::string> expected = {
        "---",
        "title: Analysis Site",
        "site: workflowr::wflow_site",
        "output:",
        "  workflowr::wflow_html:",
        "    toc: false",
        "---",
    };
    CHECK(fm.render() == expected);
}

TEST_CASE("ioslides header sets the presentation output") {
    auto fm = litdoc::ioslides_header("Slides", std::string("An Author"), {});
    std::vector<std::string> expected = {
        "---",
        "title: Slides",
        "author: An Author",
        "output: ioslides_presentation",
        "---",
    };
    CHECK(fm.render() == expected);
}

TEST_CASE("extras keep their position and type") {
    litdoc::FrontMatterExtras extra;
    extra.emplace_back("slide_level", FrontMatterScalar{2.0});
    extra.emplace_back("draft", FrontMatterScalar{true});
    extra.emplace_back("editor", FrontMatterScalar{std::string("source")});
    auto fm = litdoc::rmarkdown_header("T", {}, {}, "html_document", extra);
    std::vector<std::string> expected = {
        "---",
        "title: T",
        "slide_level: 2",
        "draft: true",
        "editor: source",
        "output: html_document",
        "---",
    };
    CHECK(fm.render() == expected);
}

TEST_CASE("duplicate keys are rejected") {
    litdoc::FrontMatterExtras extra;
    extra.emplace_back("title", FrontMatterScalar{std::string("again")});
    CHECK_THROWS_AS(litdoc::rmarkdown_header("T", {}, {}, "html_document", extra),
                    litdoc::Error);
}

TEST_CASE("values that would change type are single-quoted") {
    auto line = [](const std::string& value) {
        auto fm = litdoc::rmarkdown_header("T", {}, std::string(value));
        return fm.render()[2]; // the date line
    };
    CHECK(line("1973") == "date: '1973'");
    CHECK(line("4.5") == "date: '4.5'");
    CHECK(line("1e5") == "date: '1e5'");
    CHECK(line("true") == "date: 'true'");
    CHECK(line("Yes") == "date: 'Yes'");
    CHECK(line("off") == "date: 'off'");
    CHECK(line("null") == "date: 'null'");
    CHECK(line("~") == "date: '~'");
    CHECK(line("2020-01-01") == "date: '2020-01-01'");
    CHECK(line("March 2020") == "date: March 2020");
}

TEST_CASE("values with structural characters are single-quoted") {
    auto line = [](const std::string& value) {
        auto fm = litdoc::rmarkdown_header(value);
        return fm.render()[1]; // the title line
    };
    CHECK(line("[bracketed]") == "title: '[bracketed]'");
    CHECK(line("{braced}") == "title: '{braced}'");
    CHECK(line("#lead") == "title: '#lead'");
    CHECK(line("a: b") == "title: 'a: b'");
    CHECK(line("a #b") == "title: 'a #b'");
    CHECK(line("trailing:") == "title: 'trailing:'");
    CHECK(line(" padded ") == "title: ' padded '");
    CHECK(line("a'postrophe") == "title: a'postrophe");
    CHECK(line("'quoted'") == "title: '''quoted'''");
    CHECK(line("ends with #tag") == "title: 'ends with #tag'");
    CHECK(line("colon: free:form") == "title: 'colon: free:form'");
    CHECK(line("a:b") == "title: a:b");
    CHECK(line("Anscombe's Quartet") == "title: Anscombe's Quartet");
}

TEST_CASE("rendered header reparses with the intended values") {
    litdoc::FrontMatterExtras extra;
    extra.emplace_back("threshold", FrontMatterScalar{4.5});
    auto fm = litdoc::rmarkdown_header("It's a: test #1", std::string("Ann"),
                                       std::string("1973"), "html_document",
                                       extra);
    YAML::Node doc = YAML::Load(joined(fm.render()));
    CHECK(doc["title"].as<std::string>() == "It's a: test #1");
    CHECK(doc["author"].as<std::string>() == "Ann");
    CHECK(doc["date"].as<std::string>() == "1973");
    CHECK(doc["date"].Tag() == "!"); // quoted, so text rather than number
    CHECK(doc["threshold"].as<double>() == 4.5);
    CHECK(doc["output"].as<std::string>() == "html_document");

    YAML::Node wf = YAML::Load(joined(litdoc::workflowr_header("W").render()));
    CHECK(wf["site"].as<std::string>() == "workflowr::wflow_site");
    CHECK(wf["output"]["workflowr::wflow_html"]["toc"].as<bool>() == false);
}

TEST_CASE("multi-line values are rejected") {
    auto fm = litdoc::rmarkdown_header("ok");
    fm.entries[0].value = FrontMatterScalar{std::string("two\nlines")};
    CHECK_THROWS_AS(fm.render(), litdoc::Error);
}

TEST_CASE("append rejects duplicates regardless of nesting") {
    FrontMatter fm;
    fm.append("output", FrontMatterScalar{std::string("x")});
    CHECK_THROWS_AS(fm.append("output", FrontMatterScalar{std::string("y")}),
                    litdoc::Error);
}
