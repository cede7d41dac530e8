// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fixcrew::ckg {

enum class TokenKind { Identifier, Keyword, Number, String, Comment, Punct };

struct Token {
    TokenKind kind = TokenKind::Punct;
    std::string text; // strings carry their inner text, comments their body
    long line = 0;    // 1-based
    long column = 0;  // 1-based
};

// Enough lexing rules to cover a brace-structured and an indent-structured
// language with one scanner.
struct LexerRules {
    std::unordered_set<std::string> keywords;
    std::string line_comment;     // "//" or "#"
    bool block_comments = false;  // /* ... */
    bool triple_quotes = false;   // ''' and """ (with r/b/f/u prefixes)
    bool backtick_strings = false;
    bool single_quote_strings = false;
};

const LexerRules& go_rules();
const LexerRules& python_rules();

std::vector<Token> lex(std::string_view content, const LexerRules& rules);

// Token stream with comments stripped, for structural comparison.
std::vector<Token> lex_code(std::string_view content, const LexerRules& rules);

} // namespace fixcrew::ckg
