// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixcrew/error.hpp"
#include "fixcrew/patch/apply.hpp"
#include "fixcrew/patch/diff.hpp"
#include "fixcrew/patch/edit_block.hpp"
#include "fixcrew/patch/match.hpp"
#include "fixcrew/text.hpp"

#include "support/oracles.hpp"

using namespace fixcrew;
using namespace fixcrew::patch;

namespace {

const char* kSampleOld =
    "This is a sample file.\n"
    "It contains multiple lines of text.\n"
    "Here is another line.\n"
    "Goodbye!\n";

const char* kSampleNew =
    "This is a sample file.\n"
    "It contains a few lines of text.\n"
    "Here is yet another line.\n"
    "See you later!\n";

const char* kSampleDiff =
    "--- example.txt\n"
    "+++ example.txt\n"
    "@@ -1,4 +1,4 @@\n"
    " This is a sample file.\n"
    "-It contains multiple lines of text.\n"
    "-Here is another line.\n"
    "-Goodbye!\n"
    "+It contains a few lines of text.\n"
    "+Here is yet another line.\n"
    "+See you later!\n";

const char* kSampleBlock =
    "example.txt\n"
    "<<<<<<< SEARCH\n"
    "It contains multiple lines of text.\n"
    "Here is another line.\n"
    "Goodbye!\n"
    "=======\n"
    "It contains a few lines of text.\n"
    "Here is yet another line.\n"
    "See you later!\n"
    ">>>>>>> REPLACE\n";

std::string lines_text(std::initializer_list<const char*> lines, bool trailing = true) {
    std::vector<std::string> v;
    for (const char* l : lines)
        v.emplace_back(l);
    return text::join_lines(v, trailing);
}

} // namespace

TEST_CASE("parse extracts a single well-formed block") {
    auto parsed = parse_edit_blocks(kSampleBlock);
    REQUIRE(parsed.blocks.size() == 1);
    CHECK(parsed.issues.empty());
    const auto& b = parsed.blocks[0];
    CHECK(b.path == "example.txt");
    REQUIRE(b.search.size() == 3);
    CHECK(b.search[0] == "It contains multiple lines of text.");
    REQUIRE(b.replace.size() == 3);
    CHECK(b.replace[2] == "See you later!");
}

TEST_CASE("parse of empty input finds nothing") {
    auto parsed = parse_edit_blocks("");
    CHECK(parsed.blocks.empty());
    CHECK(parsed.issues.empty());
}

TEST_CASE("parse keeps source order and ignores prose") {
    std::string input = "Here is my plan, first fix a.txt:\n\n";
    input += "a.txt\n<<<<<<< SEARCH\nold a\n=======\nnew a\n>>>>>>> REPLACE\n";
    input += "\nand then b.txt needs the same treatment:\n\n";
    input += "b.txt\n<<<<<<< SEARCH\nold b\n=======\nnew b\n>>>>>>> REPLACE\n";
    input += "\nthat should do it.\n";

    auto parsed = parse_edit_blocks(input);
    REQUIRE(parsed.blocks.size() == 2);
    CHECK(parsed.blocks[0].path == "a.txt");
    CHECK(parsed.blocks[1].path == "b.txt");
    CHECK(parsed.issues.empty());
}

TEST_CASE("parse tolerates fenced paths and trailing colons") {
    std::string input = "`src/mod.py`:\n<<<<<<< SEARCH\nx = 1\n=======\nx = 2\n>>>>>>> REPLACE\n";
    auto parsed = parse_edit_blocks(input);
    REQUIRE(parsed.blocks.size() == 1);
    CHECK(parsed.blocks[0].path == "src/mod.py");
}

TEST_CASE("malformed blocks are reported, not dropped") {
    SUBCASE("missing divider") {
        std::string input = "a.txt\n<<<<<<< SEARCH\nstuff\n>>>>>>> REPLACE\n";
        auto parsed = parse_edit_blocks(input);
        CHECK(parsed.blocks.empty());
        REQUIRE(parsed.issues.size() == 1);
        CHECK(parsed.issues[0].line == 2);
        CHECK(parsed.issues[0].reason.find("=======") != std::string::npos);
    }
    SUBCASE("missing close marker") {
        std::string input = "a.txt\n<<<<<<< SEARCH\nstuff\n=======\nnew stuff\n";
        auto parsed = parse_edit_blocks(input);
        CHECK(parsed.blocks.empty());
        REQUIRE(parsed.issues.size() == 1);
        CHECK(parsed.issues[0].reason.find("REPLACE") != std::string::npos);
    }
    SUBCASE("missing path") {
        std::string input = "```\n<<<<<<< SEARCH\nstuff\n=======\nnew\n>>>>>>> REPLACE\n";
        auto parsed = parse_edit_blocks(input);
        CHECK(parsed.blocks.empty());
        REQUIRE(parsed.issues.size() == 1);
        CHECK(parsed.issues[0].reason.find("path") != std::string::npos);
    }
    SUBCASE("a bad block does not hide a later good one") {
        std::string input = "a.txt\n<<<<<<< SEARCH\nstuff\n";
        input += "b.txt\n<<<<<<< SEARCH\nold\n=======\nnew\n>>>>>>> REPLACE\n";
        auto parsed = parse_edit_blocks(input);
        REQUIRE(parsed.blocks.size() == 1);
        CHECK(parsed.blocks[0].path == "b.txt");
        CHECK(parsed.issues.size() == 1);
    }
}

TEST_CASE("locate_match finds verbatim occurrences") {
    std::string content = lines_text({"one", "two", "three", "four", "five"});
    auto m = locate_match(content, {"two", "three", "four"});
    CHECK(m.start_line == 2);
    CHECK(m.end_line == 4);
    CHECK(m.score == 1.0);
    CHECK(m.strategy == MatchStrategy::Exact);
}

TEST_CASE("locate_match falls back to trimmed comparison") {
    std::string content = lines_text({"header", "    alpha one", "    beta two", "    gamma three", "footer"});
    auto m = locate_match(content, {"alpha one", "beta two", "gamma three"});
    CHECK(m.start_line == 2);
    CHECK(m.end_line == 4);
    CHECK(m.strategy == MatchStrategy::WhitespaceNormalized);
    CHECK(m.score == 1.0);
}

TEST_CASE("locate_match fuzzy window agrees with the exhaustive oracle") {
    std::vector<std::string> file = {
        "def alpha():",  "    return 1",      "",   "def beta(x):", "    value = x + 1",
        "    return value", "", "def gamma():", "    pass",
    };
    std::string content = text::join_lines(file, true);
    std::vector<std::string> search = {"def beta(x):", "    vlaue = x + 1", "    return value"};

    auto expected = oracle::best_window(file, search);
    auto m = locate_match(content, search);
    CHECK(m.strategy == MatchStrategy::Fuzzy);
    CHECK(m.start_line == static_cast<long>(expected.start) + 1);
    CHECK(m.score == doctest::Approx(expected.sum / 3.0));
    CHECK(m.start_line == 4); // the true target
}

TEST_CASE("locate_match rejects duplicated exact targets") {
    std::string content = lines_text({"a", "dup", "b", "dup", "c"});
    CHECK_THROWS_AS(locate_match(content, {"dup"}), Error);
    try {
        locate_match(content, {"dup"});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AmbiguousExactMatch);
    }
}

TEST_CASE("locate_match reports the best score when below threshold") {
    std::string content = lines_text({"completely", "unrelated", "content"});
    try {
        locate_match(content, {"nothing", "like", "this at all"});
        FAIL("expected NoAcceptableMatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoAcceptableMatch);
        CHECK(std::string(e.what()).find("best window scores") != std::string::npos);
    }
}

TEST_CASE("locate_match fuzzy equals oracle over random perturbations") {
    oracle::TextGen gen(20260809);
    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t file_len = 20 + gen.pick(60);
        auto file = gen.lines(file_len);
        std::size_t m = 2 + gen.pick(5);
        std::size_t at = gen.pick(static_cast<std::uint32_t>(file_len - m));
        std::vector<std::string> search(file.begin() + at, file.begin() + at + m);
        // perturb one line with a typo
        std::string& target = search[gen.pick(static_cast<std::uint32_t>(m))];
        if (!target.empty())
            target[gen.pick(static_cast<std::uint32_t>(target.size()))] = 'Q';
        else
            target = "Q";

        std::string content = text::join_lines(file, true);
        auto expected = oracle::best_window(file, search);
        try {
            auto got = locate_match(content, search);
            if (got.strategy == MatchStrategy::Fuzzy) {
                CHECK(got.start_line == static_cast<long>(expected.start) + 1);
                ++checked;
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::AmbiguousExactMatch)
                CHECK(expected.exact_hits >= 2);
            else
                CHECK(expected.sum / static_cast<double>(m) < 0.8);
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("apply_edit reproduces the sample replacement") {
    auto parsed = parse_edit_blocks(kSampleBlock);
    REQUIRE(parsed.blocks.size() == 1);
    auto result = apply_edit(kSampleOld, parsed.blocks[0]);
    CHECK(result.new_content == kSampleNew);
    CHECK(result.diff.to_string() == kSampleDiff);
    REQUIRE(result.diff.hunks.size() == 1);
    CHECK(apply_unified_diff(kSampleOld, result.diff) == kSampleNew);
}

TEST_CASE("apply_edit with identical search and replace is a no-op") {
    EditBlock block{"f.txt", {"two", "three"}, {"two", "three"}};
    std::string content = lines_text({"one", "two", "three", "four"});
    auto result = apply_edit(content, block);
    CHECK(result.new_content == content);
    CHECK(result.diff.empty());
    CHECK(result.diff.to_string() == "");
}

TEST_CASE("apply_edit shifts replacement indentation to the match site") {
    std::string content = lines_text({"start", "    alpha()", "    omega()", "end"});
    EditBlock block{"f.py", {"alpha()", "omega()"}, {"alpha()", "extra()", "omega()"}};
    auto result = apply_edit(content, block);
    CHECK(result.new_content == lines_text({"start", "    alpha()", "    extra()", "    omega()", "end"}));
    CHECK_FALSE(result.indentation_fallback);
}

TEST_CASE("apply_edit shifts left when the search is deeper than the match") {
    std::string content = lines_text({"alpha()", "omega()"});
    EditBlock block{"f.py", {"        alpha()", "        omega()"}, {"        beta()"}};
    auto result = apply_edit(content, block);
    CHECK(result.new_content == lines_text({"beta()"}));
}

TEST_CASE("apply_edit copies the indentation unit from the match site") {
    std::string content = lines_text({"start", "\talpha()", "end"});
    EditBlock block{"f.go", {"alpha()"}, {"beta()"}};
    auto result = apply_edit(content, block);
    CHECK(result.new_content == lines_text({"start", "\tbeta()", "end"}));
}

TEST_CASE("apply_edit leaves blank replacement lines unindented") {
    std::string content = lines_text({"    alpha()", "    omega()"});
    EditBlock block{"f.py", {"alpha()", "omega()"}, {"alpha()", "", "omega()"}};
    auto result = apply_edit(content, block);
    CHECK(result.new_content == lines_text({"    alpha()", "", "    omega()"}));
}

TEST_CASE("apply_edit flags undecidable indentation and keeps going") {
    std::string content = lines_text({"a", "", "next", "b"});
    EditBlock block{"f.txt", {"", "next"}, {"", "changed"}};
    auto result = apply_edit(content, block);
    CHECK(result.indentation_fallback);
    CHECK(result.new_content == lines_text({"a", "", "changed", "b"}));
}

TEST_CASE("apply_edit creates files from empty search blocks") {
    EditBlock block{"new.txt", {}, {"hello", "world"}};
    auto result = apply_edit("", block);
    CHECK(result.new_content == "hello\nworld\n");
    CHECK(result.diff.old_path == "/dev/null");
    CHECK(result.diff.new_path == "new.txt");
    CHECK(apply_unified_diff("", result.diff) == "hello\nworld\n");

    CHECK_THROWS_AS(apply_edit("occupied\n", block), Error);
}

TEST_CASE("render_unified_diff of identical inputs is empty") {
    CHECK(render_unified_diff("a\nb\n", "a\nb\n", "f").empty());
    CHECK(render_unified_diff("", "", "f").empty());
}

TEST_CASE("render_unified_diff reproduces the sample hunk byte for byte") {
    auto diff = render_unified_diff(kSampleOld, kSampleNew, "example.txt", 3);
    CHECK(diff.to_string() == kSampleDiff);
    REQUIRE(diff.hunks.size() == 1);
    const auto& h = diff.hunks[0];
    CHECK(h.old_start == 1);
    CHECK(h.old_len == 4);
    CHECK(h.new_start == 1);
    CHECK(h.new_len == 4);
    CHECK(h.arithmetic_consistent());
}

TEST_CASE("far-apart changes produce two hunks that re-apply cleanly") {
    std::vector<std::string> old_lines, new_lines;
    for (int i = 1; i <= 40; ++i) {
        old_lines.push_back("line " + std::to_string(i));
        new_lines.push_back(i == 3 ? "line three changed"
                                   : (i == 37 ? "line thirty-seven changed" : "line " + std::to_string(i)));
    }
    std::string old_text = text::join_lines(old_lines, true);
    std::string new_text = text::join_lines(new_lines, true);

    auto diff = render_unified_diff(old_text, new_text, "f.txt", 3);
    REQUIRE(diff.hunks.size() == 2);
    for (const auto& h : diff.hunks)
        CHECK(h.arithmetic_consistent());
    CHECK(oracle::apply_diff(old_text, diff) == new_text);
    CHECK(apply_unified_diff(old_text, diff) == new_text);
}

TEST_CASE("diffs carry missing trailing newlines through") {
    SUBCASE("old side") {
        auto diff = render_unified_diff("a\nb", "a\nc\n", "f");
        std::string rendered = diff.to_string();
        CHECK(rendered.find("\\ No newline at end of file") != std::string::npos);
        CHECK(apply_unified_diff("a\nb", diff) == "a\nc\n");
    }
    SUBCASE("new side") {
        auto diff = render_unified_diff("a\nb\n", "a\nb", "f");
        CHECK(apply_unified_diff("a\nb\n", diff) == "a\nb");
    }
    SUBCASE("both sides unchanged last line") {
        auto diff = render_unified_diff("x\ny", "q\ny", "f", 3);
        CHECK(apply_unified_diff("x\ny", diff) == "q\ny");
    }
}

TEST_CASE("apply_unified_diff is strict about context") {
    auto diff = render_unified_diff(kSampleOld, kSampleNew, "example.txt");
    CHECK_THROWS_AS(apply_unified_diff("totally different\n", diff), Error);
    try {
        apply_unified_diff("totally different\n", diff);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DiffApplyFailure);
    }
}

TEST_CASE("parse_patch round-trips rendered diffs") {
    auto diff = render_unified_diff(kSampleOld, kSampleNew, "example.txt");
    auto parsed = parse_unified_diff(diff.to_string());
    CHECK(parsed.to_string() == diff.to_string());
    CHECK(parsed.old_path == "example.txt");

    auto set = parse_patch(std::string(diff.to_string()) + diff.to_string());
    CHECK(set.files.size() == 2);
}

TEST_CASE("parse_patch strips git-style prefixes and tolerates headers") {
    std::string text = "diff --git a/f.txt b/f.txt\nindex 000..111 100644\n"
                       "--- a/f.txt\n+++ b/f.txt\n@@ -1,1 +1,1 @@\n-a\n+b\n";
    auto diff = parse_unified_diff(text);
    CHECK(diff.old_path == "f.txt");
    CHECK(diff.new_path == "f.txt");
    CHECK(apply_unified_diff("a\n", diff) == "b\n");
}

TEST_CASE("parse_patch rejects inconsistent hunks") {
    CHECK_THROWS_AS(parse_unified_diff("--- f\n+++ f\n@@ -1,2 +1,1 @@\n-a\n"), Error);
    CHECK_THROWS_AS(parse_unified_diff("--- f\n+++ f\n@@ bogus @@\n"), Error);
}

TEST_CASE("random diff round trips, byte exact") {
    oracle::TextGen gen(424242);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = gen.pick(40);
        auto old_lines = gen.lines(n);
        std::vector<std::string> new_lines;
        for (const auto& l : old_lines) {
            switch (gen.pick(5)) {
            case 0: break; // delete
            case 1: new_lines.push_back(l + " edited"); break;
            case 2:
                new_lines.push_back(l);
                new_lines.push_back(gen.line());
                break;
            default: new_lines.push_back(l);
            }
        }
        bool old_nl = n == 0 || gen.pick(4) != 0;
        bool new_nl = new_lines.empty() || gen.pick(4) != 0;
        std::string old_text = text::join_lines(old_lines, old_nl);
        std::string new_text = text::join_lines(new_lines, new_nl);

        int context = static_cast<int>(gen.pick(4));
        auto diff = render_unified_diff(old_text, new_text, "file.txt", context);
        for (const auto& h : diff.hunks)
            REQUIRE(h.arithmetic_consistent());
        REQUIRE(oracle::apply_diff(old_text, diff) == new_text);
        REQUIRE(apply_unified_diff(old_text, diff) == new_text);
        if (!diff.empty()) {
            auto reparsed = parse_unified_diff(diff.to_string());
            REQUIRE(reparsed.to_string() == diff.to_string());
            REQUIRE(apply_unified_diff(old_text, reparsed) == new_text);
        }
    }
}

TEST_CASE("apply_blocks runs sequentially against running content") {
    std::map<std::string, std::string> files = {
        {"a.txt", lines_text({"one", "two", "three"})},
    };
    auto loader = [&files](const std::string& p) -> std::optional<std::string> {
        auto it = files.find(p);
        if (it == files.end())
            return std::nullopt;
        return it->second;
    };

    std::vector<EditBlock> blocks = {
        {"a.txt", {"two"}, {"TWO"}},
        {"a.txt", {"TWO", "three"}, {"TWO", "THREE"}},
        {"b.txt", {}, {"fresh"}},
    };
    auto result = apply_blocks(loader, blocks);
    REQUIRE(result.files.size() == 2);
    CHECK(result.files[0].path == "a.txt");
    CHECK(result.files[0].updated == lines_text({"one", "TWO", "THREE"}));
    CHECK(apply_unified_diff(result.files[0].original, result.files[0].diff) == result.files[0].updated);
    CHECK(result.files[1].created);
    CHECK(result.files[1].updated == "fresh\n");
}

TEST_CASE("apply_blocks aborts the whole batch on a failing block") {
    std::map<std::string, std::string> files = {{"a.txt", "one\ntwo\n"}};
    auto loader = [&files](const std::string& p) -> std::optional<std::string> {
        auto it = files.find(p);
        if (it == files.end())
            return std::nullopt;
        return it->second;
    };
    std::vector<EditBlock> blocks = {
        {"a.txt", {"one"}, {"ONE"}},
        {"a.txt", {"does not exist anywhere"}, {"x"}},
    };
    CHECK_THROWS_AS(apply_blocks(loader, blocks), Error);
    CHECK(files["a.txt"] == "one\ntwo\n"); // loader-side content untouched
}

TEST_CASE("hunk headers keep zero-length conventions") {
    SUBCASE("pure insertion at top") {
        auto diff = render_unified_diff("", "a\nb\n", "f", 0);
        REQUIRE(diff.hunks.size() == 1);
        CHECK(diff.hunks[0].old_start == 0);
        CHECK(diff.hunks[0].old_len == 0);
        CHECK(diff.hunks[0].new_start == 1);
        CHECK(diff.hunks[0].new_len == 2);
    }
    SUBCASE("pure deletion to empty") {
        auto diff = render_unified_diff("a\nb\n", "", "f", 0);
        REQUIRE(diff.hunks.size() == 1);
        CHECK(diff.hunks[0].old_start == 1);
        CHECK(diff.hunks[0].old_len == 2);
        CHECK(diff.hunks[0].new_start == 0);
        CHECK(diff.hunks[0].new_len == 0);
    }
    SUBCASE("zero-context insertion in the middle") {
        auto diff = render_unified_diff("a\nb\n", "a\nx\nb\n", "f", 0);
        REQUIRE(diff.hunks.size() == 1);
        CHECK(diff.hunks[0].old_len == 0);
        CHECK(diff.hunks[0].old_start == 1);
        CHECK(apply_unified_diff("a\nb\n", diff) == "a\nx\nb\n");
    }
}
