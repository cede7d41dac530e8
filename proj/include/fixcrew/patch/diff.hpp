// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::patch {

// One @@ hunk. Lines keep their ' ' / '-' / '+' prefix and carry no newline.
struct Hunk {
    long old_start = 0; // 1-based; 0 for an insertion at the top of the file
    long old_len = 0;
    long new_start = 0;
    long new_len = 0;
    std::vector<std::string> lines;

    bool arithmetic_consistent() const;
};

struct UnifiedDiff {
    std::string old_path;
    std::string new_path;
    std::vector<Hunk> hunks;
    // Set when the corresponding side's final line appears in a hunk and
    // that side does not end with a newline ("\ No newline at end of file").
    bool old_no_newline = false;
    bool new_no_newline = false;
    // Total line counts of the two sides; used to place the EOF markers.
    long old_lines = 0;
    long new_lines = 0;

    bool empty() const { return hunks.empty(); }
    std::string to_string() const;
};

// A multi-file patch, rendered as concatenated single-file diffs.
struct PatchSet {
    std::vector<UnifiedDiff> files;

    bool empty() const;
    std::string to_string() const;
};

// Minimal line diff between two texts, with `context` lines of context per
// hunk. Identical inputs produce an empty diff.
UnifiedDiff render_unified_diff(std::string_view old_content, std::string_view new_content,
                                std::string_view path, int context = 3);

// Same, with distinct side paths ("/dev/null" marks creation/deletion).
UnifiedDiff make_diff(std::string_view old_content, std::string_view new_content,
                      std::string_view old_path, std::string_view new_path, int context = 3);

// Strict application: context and deletion lines must match the old content
// exactly. Throws Error{DiffApplyFailure} on any mismatch.
std::string apply_unified_diff(std::string_view old_content, const UnifiedDiff& diff);

// Parses one-or-many single-file unified diffs. Git-style "a/"//"b/" path
// prefixes and header noise lines are tolerated. Throws Error{MalformedDiff}.
PatchSet parse_patch(std::string_view text);

// Convenience for single-file patch text. Throws when the text contains
// zero or more than one file diff.
UnifiedDiff parse_unified_diff(std::string_view text);

} // namespace fixcrew::patch
