// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixcrew/error.hpp"
#include "fixcrew/gindex/search.hpp"
#include "fixcrew/text.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>

namespace fs = std::filesystem;
using namespace fixcrew;
using namespace fixcrew::gindex;

namespace {

const fs::path kListing1 = fs::path(FIXCREW_FIXTURE_DIR) / "listing1";

struct TempTree {
    fs::path root;
    TempTree() {
        root = fs::temp_directory_path() / ("fixcrew_gindex_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(root);
    }
    ~TempTree() { fs::remove_all(root); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    void add(const std::string& rel, const std::string& content) {
        fs::path p = root / rel;
        fs::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << content;
    }
};

// Naive reference scan: regex per line over an explicit file list.
std::vector<GrepMatch> naive_grep(const fs::path& root, const std::vector<std::string>& rels,
                                  const std::string& pattern) {
    std::regex re(pattern);
    std::vector<GrepMatch> out;
    for (const auto& rel : rels) {
        std::ifstream in(root / rel, std::ios::binary);
        std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto split = text::split_lines(all);
        for (std::size_t i = 0; i < split.lines.size(); ++i) {
            const std::string& line = split.lines[i];
            for (auto m = std::sregex_iterator(line.begin(), line.end(), re);
                 m != std::sregex_iterator(); ++m)
                out.push_back({rel, static_cast<long>(i) + 1, static_cast<long>(m->position(0)) + 1, line});
        }
    }
    return out;
}

} // namespace

TEST_CASE("find_file matches file names for slash-free globs") {
    auto hits = find_file(kListing1, "*.go");
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == "main/cmd/pkg_b/fileB.go");
    CHECK(hits[1] == "main/fileA.go");

    CHECK(find_file(kListing1, "fileA.go") == std::vector<std::string>{"main/fileA.go"});
}

TEST_CASE("find_file with no match returns an empty list") {
    CHECK(find_file(kListing1, "*.rs").empty());
}

TEST_CASE("find_file full-path globs cross directories only via **") {
    TempTree t;
    t.add("test_a.py", "pass\n");
    t.add("pkg/test_b.py", "pass\n");
    t.add("pkg/helper.py", "pass\n");

    auto hits = find_file(t.root, "**/test_*.py");
    REQUIRE(hits.size() == 2); // "**/" also matches zero directories
    CHECK(hits[0] == "pkg/test_b.py");
    CHECK(hits[1] == "test_a.py");

    CHECK(find_file(t.root, "pkg/*.py").size() == 2);
    CHECK(find_file(t.root, "*/helper.py") == std::vector<std::string>{"pkg/helper.py"});
}

TEST_CASE("find_file rejects bad globs and unreadable roots") {
    CHECK_THROWS_AS(find_file(kListing1, "[unterminated"), Error);
    CHECK_THROWS_AS(find_file(kListing1 / "no_such_dir", "*"), Error);
}

TEST_CASE("excluded directories are invisible; the rest equals the full tree") {
    TempTree t;
    t.add("src/a.txt", "a\n");
    t.add("build/out.txt", "generated\n");
    t.add(".git/config", "noise\n");
    t.add("docs/b.txt", "b\n");

    auto visible = list_tree(t.root);
    CHECK(visible == std::vector<std::string>{"docs/b.txt", "src/a.txt"});

    // visible ∪ excluded == everything on disk
    std::set<std::string> everything;
    for (auto& e : fs::recursive_directory_iterator(t.root))
        if (e.is_regular_file())
            everything.insert(fs::relative(e.path(), t.root).generic_string());
    std::set<std::string> unioned(visible.begin(), visible.end());
    unioned.insert("build/out.txt");
    unioned.insert(".git/config");
    CHECK(unioned == everything);
}

TEST_CASE("grep finds every occurrence with line and column") {
    auto result = grep(kListing1, "FunctionB");
    REQUIRE(!result.truncated);
    // fileB.go: doc comment, method decl; fileA.go: call site + trailing comment
    std::vector<GrepMatch> expected =
        naive_grep(kListing1, {"main/cmd/pkg_b/fileB.go", "main/fileA.go"}, "FunctionB");
    REQUIRE(result.matches.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(result.matches[i].path == expected[i].path);
        CHECK(result.matches[i].line == expected[i].line);
        CHECK(result.matches[i].column == expected[i].column);
        CHECK(result.matches[i].line_text == expected[i].line_text);
    }
}

TEST_CASE("grep with no occurrences returns an empty list") {
    CHECK(grep(kListing1, "NoSuchTokenAnywhere").matches.empty());
}

TEST_CASE("grep scoped to one file sees only that file") {
    auto result = grep(kListing1, "^import", std::optional<std::string>("main/fileA.go"));
    REQUIRE(result.matches.size() == 1);
    CHECK(result.matches[0].path == "main/fileA.go");
    CHECK(result.matches[0].line == 4);
    CHECK(result.matches[0].column == 1);
}

TEST_CASE("grep skips binary files") {
    TempTree t;
    t.add("data.bin", std::string("needle\0needle", 13));
    t.add("plain.txt", "needle\n");
    auto result = grep(t.root, "needle");
    REQUIRE(result.matches.size() == 1);
    CHECK(result.matches[0].path == "plain.txt");
}

TEST_CASE("grep caps matches and flags truncation") {
    TempTree t;
    std::string body;
    for (int i = 0; i < 50; ++i)
        body += "hit\n";
    t.add("many.txt", body);
    IndexOptions opts;
    opts.match_cap = 10;
    auto result = grep(t.root, "hit", std::nullopt, opts);
    CHECK(result.truncated);
    CHECK(result.matches.size() == 10);
}

TEST_CASE("grep rejects invalid patterns") {
    CHECK_THROWS_AS(grep(kListing1, "("), Error);
    try {
        grep(kListing1, "(");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidPattern);
    }
}

TEST_CASE("grep equals the naive scan oracle on the whole fixture") {
    auto rels = list_tree(kListing1);
    for (const std::string& pattern : {"Struct", "func ", "pkg_b\\.", "x"}) {
        auto got = grep(kListing1, pattern);
        auto expected = naive_grep(kListing1, rels, pattern);
        REQUIRE(got.matches.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(got.matches[i].path == expected[i].path);
            CHECK(got.matches[i].line == expected[i].line);
            CHECK(got.matches[i].column == expected[i].column);
        }
    }
}
