// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::text {

// A file body split into lines. Lines never contain '\n'; whether the
// original ended with a newline is kept so a byte-exact join is possible.
struct Lines {
    std::vector<std::string> lines;
    bool trailing_newline = true; // empty text joins back to ""
};

Lines split_lines(std::string_view content);
std::string join_lines(const std::vector<std::string>& lines, bool trailing_newline);

std::string_view ltrim(std::string_view s);
std::string_view rtrim(std::string_view s);
std::string_view trim(std::string_view s);

// Leading run of spaces/tabs.
std::string_view leading_whitespace(std::string_view s);

std::string to_lower(std::string_view s);

bool is_identifier_char(char c);
bool is_identifier_start(char c);

struct IdentifierHit {
    std::string token;
    std::size_t column = 0; // 1-based
};

// All [A-Za-z_][A-Za-z0-9_]* tokens on one line, left to right.
std::vector<IdentifierHit> identifiers_on_line(std::string_view line);

// Splits an identifier into case-folded words: camelCase, PascalCase,
// snake_case and digit boundaries all count ("NewStructB" -> new, struct, b).
std::vector<std::string> split_identifier_words(std::string_view identifier);

// Case-folded word set of free text: identifier tokens further split per
// split_identifier_words. Used by the fallback lexical scorers.
std::vector<std::string> query_words(std::string_view text);

std::size_t levenshtein(std::string_view a, std::string_view b);

// 1 - distance/max_len over trimmed inputs; two blank lines rate 1.0.
double line_similarity(std::string_view a, std::string_view b);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);
bool contains(std::string_view haystack, std::string_view needle);

std::string replace_all(std::string s, std::string_view from, std::string_view to);

// Collapses interior whitespace runs to single spaces and trims the ends.
std::string normalize_whitespace(std::string_view s);

} // namespace fixcrew::text
