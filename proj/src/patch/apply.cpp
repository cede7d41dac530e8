// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/patch/apply.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>

namespace fixcrew::patch {

namespace {

// Shifts every non-blank replacement line by the indentation delta between
// the matched segment and the search block. The whitespace unit (tabs vs
// spaces) is copied verbatim from the match site.
std::vector<std::string> reindent(const std::vector<std::string>& replace,
                                  std::string_view match_indent, std::string_view search_indent) {
    long delta = static_cast<long>(match_indent.size()) - static_cast<long>(search_indent.size());
    if (delta == 0)
        return replace;
    std::vector<std::string> out;
    out.reserve(replace.size());
    if (delta > 0) {
        std::string prefix(match_indent.substr(0, static_cast<std::size_t>(delta)));
        for (const auto& line : replace)
            out.push_back(text::trim(line).empty() ? line : prefix + line);
    } else {
        std::size_t strip = static_cast<std::size_t>(-delta);
        for (const auto& line : replace) {
            std::size_t ws = text::leading_whitespace(line).size();
            out.push_back(line.substr(std::min(ws, strip)));
        }
    }
    return out;
}

} // namespace

ApplyResult apply_edit(std::string_view content, const EditBlock& block, const ApplyOptions& options) {
    ApplyResult result;

    if (block.is_creation()) {
        if (!content.empty())
            throw Error(ErrorCode::MalformedBlock,
                        "creation block (empty search) for non-empty file " + block.path);
        result.new_content = text::join_lines(block.replace, true);
        result.diff = make_diff("", result.new_content, "/dev/null", block.path, options.diff_context);
        return result;
    }

    MatchResult match = locate_match(content, block.search, options.match);
    result.match = match;

    auto split = text::split_lines(content);
    const auto& lines = split.lines;

    const std::string& match_first = lines[static_cast<std::size_t>(match.start_line - 1)];
    const std::string& search_first = block.search.front();
    std::vector<std::string> replacement;
    if (text::trim(match_first).empty() && text::trim(search_first).empty()) {
        result.indentation_fallback = true;
        replacement = block.replace;
    } else {
        replacement = reindent(block.replace, text::leading_whitespace(match_first),
                               text::leading_whitespace(search_first));
    }

    std::vector<std::string> updated;
    updated.reserve(lines.size() + replacement.size());
    updated.insert(updated.end(), lines.begin(), lines.begin() + (match.start_line - 1));
    updated.insert(updated.end(), replacement.begin(), replacement.end());
    updated.insert(updated.end(), lines.begin() + match.end_line, lines.end());

    result.new_content = text::join_lines(updated, split.trailing_newline);
    result.diff = render_unified_diff(content, result.new_content, block.path, options.diff_context);
    return result;
}

BatchResult apply_blocks(const FileLoader& load, const std::vector<EditBlock>& blocks,
                         const ApplyOptions& options) {
    BatchResult result;
    std::map<std::string, std::size_t> index; // path -> slot in result.files

    for (const auto& block : blocks) {
        auto it = index.find(block.path);
        if (it == index.end()) {
            auto existing = load(block.path);
            if (block.is_creation() && existing.has_value())
                throw Error(ErrorCode::MalformedBlock, "creation block for existing file " + block.path);
            if (!block.is_creation() && !existing.has_value())
                throw Error(ErrorCode::UnreadablePath, "edit block targets missing file " + block.path);
            FileEdit edit;
            edit.path = block.path;
            edit.original = existing.value_or("");
            edit.updated = edit.original;
            edit.created = block.is_creation();
            index.emplace(block.path, result.files.size());
            result.files.push_back(std::move(edit));
            it = index.find(block.path);
        } else if (block.is_creation()) {
            throw Error(ErrorCode::MalformedBlock,
                        "creation block for file already touched in this batch: " + block.path);
        }

        FileEdit& edit = result.files[it->second];
        ApplyResult applied = apply_edit(edit.updated, block, options);
        edit.updated = std::move(applied.new_content);
        edit.indentation_fallback |= applied.indentation_fallback;
    }

    for (auto& edit : result.files) {
        edit.diff = edit.created
                        ? make_diff("", edit.updated, "/dev/null", edit.path, options.diff_context)
                        : render_unified_diff(edit.original, edit.updated, edit.path, options.diff_context);
    }
    return result;
}

} // namespace fixcrew::patch
