#include <vendokit/frontmatter.hpp>

#include "errors.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace vendokit;
using fixtures::error_of;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::size_t differing_lines(const std::string& a, const std::string& b) {
    const auto la = lines_of(a);
    const auto lb = lines_of(b);
    std::size_t n = la.size() > lb.size() ? la.size() - lb.size() : lb.size() - la.size();
    for (std::size_t i = 0; i < std::min(la.size(), lb.size()); ++i) {
        if (la[i] != lb[i]) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("extract_block: block at the top of the file") {
    const auto block = extract_block(fixtures::sse_module());
    CHECK(block.start_line == 0);
    CHECK(block.end_line == 5);
    REQUIRE(block.raw_lines.size() == 6);
    CHECK(block.raw_lines.front() == "# /// zerodep");
    CHECK(block.raw_lines.back() == "# ///");
}

TEST_CASE("extract_block: shebang and comments may precede the block") {
    const auto block = extract_block("#!/usr/bin/env python3\n" + fixtures::sse_module());
    CHECK(block.start_line == 1);
    CHECK(block.end_line == 6);

    const auto later = extract_block("# -*- coding: utf-8 -*-\n\n   # note\n" + std::string(fixtures::sse_block));
    CHECK(later.start_line == 3);
}

TEST_CASE("extract_block: rejections") {
    CHECK(error_of([] { extract_block("import os\n" + std::string(fixtures::sse_block)); }) == Errc::NoFrontmatter);
    CHECK(error_of([] { extract_block(""); }) == Errc::NoFrontmatter);
    CHECK(error_of([] { extract_block("#  /// zerodep\n# ///\n"); }) == Errc::NoFrontmatter);
    CHECK(error_of([] { extract_block("# /// zerodep\n# version = \"1.0.0\"\n"); }) == Errc::UnterminatedBlock);
    CHECK(error_of([] { extract_block("# /// zerodep\nversion = 1\n# ///\n"); }) == Errc::UnterminatedBlock);
}

TEST_CASE("extract_block: CRLF files") {
    std::string crlf;
    for (char c : std::string(fixtures::sse_block)) {
        if (c == '\n') crlf += '\r';
        crlf += c;
    }
    const auto block = extract_block(crlf);
    CHECK(block.end_line == 5);
    CHECK(block.raw_lines.back() == "# ///");
}

TEST_CASE("parse_metadata: the sse block") {
    const auto meta = read_metadata(fixtures::sse_module(), "sse");
    CHECK(meta.name == "sse");
    CHECK(format_version(meta.version) == "0.3.1");
    CHECK(meta.deps == std::vector<std::string>{"httpclient"});
    CHECK(meta.tier == Tier::subsystem);
    CHECK(meta.category == Category::serialization);
    CHECK(meta.extra.empty());
}

TEST_CASE("parse_metadata: deps default to empty") {
    const auto meta = read_metadata("# /// zerodep\n# version = \"1.0.0\"\n# tier = \"simple\"\n"
                                    "# category = \"config\"\n# ///\n",
                                    "dotenv");
    CHECK(meta.deps.empty());
    CHECK(meta.category == Category::config);
}

TEST_CASE("parse_metadata: errors") {
    auto block = [](const std::string& interior) {
        return "# /// zerodep\n" + interior + "# ///\n";
    };
    const std::string ok_rest = "# tier = \"simple\"\n# category = \"config\"\n";
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0.0\"\n# tier = \"huge\"\n# category = \"config\"\n"), "m"); }) ==
          Errc::InvalidTier);
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0.0\"\n# tier = \"simple\"\n# category = \"misc\"\n"), "m"); }) ==
          Errc::InvalidCategory);
    CHECK(error_of([&] { read_metadata(block(ok_rest), "m"); }) == Errc::MissingRequiredKey);
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0\"\n" + ok_rest), "m"); }) == Errc::MalformedVersion);
    CHECK(error_of([&] { read_metadata(block("# version = 1.0.0\n" + ok_rest), "m"); }) == Errc::MalformedAssignment);
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0.0\"\n# version = \"1.0.1\"\n" + ok_rest), "m"); }) ==
          Errc::DuplicateKey);
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0.0\"\n# deps = [\"m\"]\n" + ok_rest), "m"); }) ==
          Errc::InvalidDependency);
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0.0\"\n# deps = [\"a\", \"a\"]\n" + ok_rest), "m"); }) ==
          Errc::InvalidDependency);
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0.0\"\n# deps = [\"Bad\"]\n" + ok_rest), "m"); }) ==
          Errc::InvalidDependency);
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0.0\"\n# deps = [\"a\"\n" + ok_rest), "m"); }) ==
          Errc::MalformedAssignment);
    CHECK(error_of([&] { read_metadata(block("# version = \"1.0.0\"\n" + ok_rest), "Mod"); }) ==
          Errc::InvalidModuleName);
}

TEST_CASE("parse_metadata: unknown keys are preserved in order") {
    const auto meta = read_metadata("# /// zerodep\n# version = \"1.0.0\"\n# zeta = \"z # inside\"\n"
                                    "# tier = \"simple\"\n# alpha = [\"x\", \"y\",]\n# category = \"text\"\n# ///\n",
                                    "m");
    REQUIRE(meta.extra.size() == 2);
    CHECK(meta.extra[0].first == "zeta");
    CHECK(meta.extra[0].second == "\"z # inside\"");
    CHECK(meta.extra[1].first == "alpha");
    CHECK(meta.extra[1].second == "[\"x\", \"y\",]");
}

TEST_CASE("parse_metadata: trailing comments and blank interior lines") {
    const auto meta = read_metadata("# /// zerodep\n# version = \"2.0.0\"  # managed by bump\n#\n"
                                    "# tier = \"medium\"\n# category = \"crypto\"\n# ///\n",
                                    "aes");
    CHECK(format_version(meta.version) == "2.0.0");
}

TEST_CASE("custom comment prefix") {
    Profile lua;
    lua.comment_prefix = "--";
    lua.extension = ".lua";
    const std::string src = "-- /// zerodep\n-- version = \"0.1.0\"\n-- tier = \"simple\"\n"
                            "-- category = \"text\"\n-- ///\nreturn {}\n";
    const auto meta = read_metadata(src, "strings", lua);
    CHECK(format_version(meta.version) == "0.1.0");
    CHECK(replace_version(src, parse_version("0.2.0"), lua).find("-- version = \"0.2.0\"") != std::string::npos);
}

TEST_CASE("replace_version: examples") {
    const auto src = fixtures::sse_module();
    const auto bumped = replace_version(src, parse_version("0.3.2"));
    CHECK(differing_lines(src, bumped) == 1);
    CHECK(lines_of(bumped)[1] == "# version = \"0.3.2\"");
    CHECK(read_metadata(bumped, "sse").version == parse_version("0.3.2"));

    CHECK(replace_version(src, parse_version("0.3.1")) == src);

    const std::string trailing = src + "\n\n# version = \"9.9.9\"\nx = '# ///'\n";
    const auto out = replace_version(trailing, parse_version("1.0.0"));
    CHECK(out.substr(out.size() - (trailing.size() - src.size())) == trailing.substr(src.size()));
    CHECK(differing_lines(trailing, out) == 1);
}

TEST_CASE("render_block reproduces the sse block") {
    const auto meta = read_metadata(fixtures::sse_module(), "sse");
    std::string rendered;
    for (const auto& line : render_block(meta)) rendered += line + "\n";
    CHECK(rendered == fixtures::sse_block);
}

TEST_CASE("properties over generated modules") {
    std::mt19937_64 rng(0xf00d);
    for (int i = 0; i < 200; ++i) {
        const auto m = fixtures::random_module(rng);
        CAPTURE(m.text);
        const auto meta = read_metadata(m.text, m.name);
        CHECK(format_version(meta.version) == m.version);
        CHECK(is_module_identifier(meta.name));
        for (const auto& d : meta.deps) {
            CHECK(is_module_identifier(d));
            CHECK(d != meta.name);
        }
        CHECK(read_metadata(m.text, m.name) == meta);

        // Re-emitting the block keeps the parsed content.
        const auto block = extract_block(m.text);
        std::string rendered;
        for (const auto& line : render_block(meta)) rendered += line + "\n";
        CHECK(read_metadata(rendered, m.name) == meta);
        CHECK(block.raw_lines.size() == lines_of(rendered).size());

        const auto next = fixtures::random_version(rng);
        const auto rewritten = replace_version(m.text, parse_version(next));
        CHECK(read_metadata(rewritten, m.name).version == parse_version(next));
        CHECK(differing_lines(m.text, rewritten) == (next == m.version ? 0u : 1u));
    }
}
