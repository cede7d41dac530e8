// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::gindex {

struct GrepMatch {
    std::string path; // relative to the search root, '/' separators
    long line = 0;    // 1-based
    long column = 0;  // 1-based byte column of the match
    std::string line_text;
};

struct GrepResult {
    std::vector<GrepMatch> matches;
    bool truncated = false;
};

struct IndexOptions {
    // Directory names pruned anywhere in the tree.
    std::vector<std::string> exclude_dirs = {".git", ".hg",        ".svn",
                                             "build", "__pycache__", ".fixcrew-repro"};
    std::size_t match_cap = 200;
};

// Glob semantics: patterns containing '/' match the relative path, others
// match the file name. '*' and '?' stop at '/', '**' crosses directories and
// "**/" also matches zero directories. Character classes pass through.
std::string glob_to_regex(std::string_view glob);

// All regular files under root whose name/path matches the glob, sorted.
std::vector<std::string> find_file(const std::filesystem::path& root, std::string_view pattern,
                                   const IndexOptions& options = {});

// Full recursive listing with the same exclusion rules (find_file with a
// match-everything pattern).
std::vector<std::string> list_tree(const std::filesystem::path& root,
                                   const IndexOptions& options = {});

// Line-oriented regex search over text files; binary files are skipped.
// `scope` restricts matching to one file or directory subtree.
GrepResult grep(const std::filesystem::path& root, std::string_view pattern,
                const std::optional<std::string>& scope = std::nullopt,
                const IndexOptions& options = {});

} // namespace fixcrew::gindex
