// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/patch/diff.hpp"
#include "fixcrew/patch/edit_block.hpp"
#include "fixcrew/patch/match.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace fixcrew::patch {

struct ApplyOptions {
    MatchOptions match;
    int diff_context = 3;
};

struct ApplyResult {
    std::string new_content;
    UnifiedDiff diff;
    std::optional<MatchResult> match; // absent for file creation
    // Both the search block's and the matched segment's first lines were
    // blank, so the indentation offset fell back to zero.
    bool indentation_fallback = false;
};

// Replaces the matched segment with the replacement, shifted by the
// indentation offset between the match site and the search block. Pure:
// nothing is written anywhere.
ApplyResult apply_edit(std::string_view content, const EditBlock& block,
                       const ApplyOptions& options = {});

// Looks up current file content; nullopt means the file does not exist.
using FileLoader = std::function<std::optional<std::string>(const std::string& path)>;

struct FileEdit {
    std::string path;
    std::string original; // empty for created files
    std::string updated;
    UnifiedDiff diff; // original -> updated, cumulative over the batch
    bool created = false;
    bool indentation_fallback = false;
};

struct BatchResult {
    std::vector<FileEdit> files; // in first-touched order
};

// Applies blocks in order against running content, all-or-nothing: the first
// failing block throws and no partial state escapes.
BatchResult apply_blocks(const FileLoader& load, const std::vector<EditBlock>& blocks,
                         const ApplyOptions& options = {});

} // namespace fixcrew::patch
