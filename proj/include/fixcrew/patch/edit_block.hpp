// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::patch {

// Conflict-marker edit request. The canonical text form is:
//
//   path/to/file
//   <<<<<<< SEARCH
//   ...lines to find...
//   =======
//   ...lines to put there...
//   >>>>>>> REPLACE
//
// An empty search section creates `path` (which must not exist yet).
struct EditBlock {
    std::string path;
    std::vector<std::string> search;
    std::vector<std::string> replace;

    bool is_creation() const { return search.empty(); }
};

struct BlockIssue {
    std::size_t line = 0; // 1-based line of the offending marker in the input
    std::string reason;
};

struct ParsedBlocks {
    std::vector<EditBlock> blocks;
    std::vector<BlockIssue> issues;
};

inline constexpr std::string_view kSearchMarker = "<<<<<<< SEARCH";
inline constexpr std::string_view kDividerMarker = "=======";
inline constexpr std::string_view kReplaceMarker = ">>>>>>> REPLACE";

// Extracts every well-formed block in order; prose around blocks is ignored
// and malformed blocks land in `issues` rather than being dropped silently.
ParsedBlocks parse_edit_blocks(std::string_view provider_text);

// Renders a block back to the canonical text form.
std::string to_text(const EditBlock& block);

} // namespace fixcrew::patch
