// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/patch/edit_block.hpp"

#include "fixcrew/text.hpp"

namespace fixcrew::patch {

namespace {

bool is_marker(std::string_view line, std::string_view marker) {
    return text::trim(line) == marker;
}

// The line right above the opening marker names the file. Code fences and
// a trailing colon are tolerated around it; markers and fences are not paths.
std::string extract_path(const std::vector<std::string>& lines, std::size_t open_idx) {
    for (std::size_t i = open_idx; i-- > 0;) {
        std::string_view cand = text::trim(lines[i]);
        if (cand.empty())
            continue;
        if (text::starts_with(cand, "```"))
            return "";
        if (cand == kSearchMarker || cand == kDividerMarker || cand == kReplaceMarker)
            return "";
        if (!cand.empty() && cand.back() == ':')
            cand = text::rtrim(cand.substr(0, cand.size() - 1));
        if (cand.size() >= 2 && cand.front() == '`' && cand.back() == '`')
            cand = text::trim(cand.substr(1, cand.size() - 2));
        return std::string(cand);
    }
    return "";
}

} // namespace

ParsedBlocks parse_edit_blocks(std::string_view provider_text) {
    ParsedBlocks out;
    auto split = text::split_lines(provider_text);
    const auto& lines = split.lines;

    std::size_t i = 0;
    while (i < lines.size()) {
        if (!is_marker(lines[i], kSearchMarker)) {
            ++i;
            continue;
        }
        const std::size_t open_idx = i;
        std::string path = extract_path(lines, open_idx);

        std::vector<std::string> search;
        std::vector<std::string> replace;
        std::size_t j = open_idx + 1;
        bool divider_found = false;
        bool closed = false;
        for (; j < lines.size(); ++j) {
            if (is_marker(lines[j], kSearchMarker))
                break; // a new block opened before this one finished
            if (!divider_found && is_marker(lines[j], kDividerMarker)) {
                divider_found = true;
                continue;
            }
            if (divider_found && is_marker(lines[j], kReplaceMarker)) {
                closed = true;
                break;
            }
            (divider_found ? replace : search).push_back(lines[j]);
        }

        if (!divider_found) {
            out.issues.push_back({open_idx + 1, "unterminated block: missing " + std::string(kDividerMarker)});
            i = j;
            continue;
        }
        if (!closed) {
            out.issues.push_back({open_idx + 1, "unterminated block: missing " + std::string(kReplaceMarker)});
            i = j;
            continue;
        }
        if (path.empty()) {
            out.issues.push_back({open_idx + 1, "missing file path above the block"});
            i = j + 1;
            continue;
        }
        out.blocks.push_back({std::move(path), std::move(search), std::move(replace)});
        i = j + 1;
    }
    return out;
}

std::string to_text(const EditBlock& block) {
    std::string out = block.path + "\n";
    out += std::string(kSearchMarker) + "\n";
    for (const auto& l : block.search)
        out += l + "\n";
    out += std::string(kDividerMarker) + "\n";
    for (const auto& l : block.replace)
        out += l + "\n";
    out += std::string(kReplaceMarker) + "\n";
    return out;
}

} // namespace fixcrew::patch
