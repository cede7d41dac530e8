// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/ckg/lexer.hpp"

#include "fixcrew/text.hpp"

#include <cctype>

namespace fixcrew::ckg {

const LexerRules& go_rules() {
    static const LexerRules rules = [] {
        LexerRules r;
        r.keywords = {"break",    "case",   "chan",  "const", "continue", "default",
                      "defer",    "else",   "fallthrough", "for",   "func", "go",
                      "goto",     "if",     "import", "interface", "map",  "package",
                      "range",    "return", "select", "struct", "switch", "type", "var"};
        r.line_comment = "//";
        r.block_comments = true;
        r.backtick_strings = true;
        r.single_quote_strings = true; // rune literals
        return r;
    }();
    return rules;
}

const LexerRules& python_rules() {
    static const LexerRules rules = [] {
        LexerRules r;
        r.keywords = {"False",  "None",   "True",    "and",    "as",     "assert", "async",
                      "await",  "break",  "class",   "continue", "def",  "del",    "elif",
                      "else",   "except", "finally", "for",    "from",   "global", "if",
                      "import", "in",     "is",      "lambda", "nonlocal", "not",  "or",
                      "pass",   "raise",  "return",  "try",    "while",  "with",   "yield"};
        r.line_comment = "#";
        r.triple_quotes = true;
        r.single_quote_strings = true;
        return r;
    }();
    return rules;
}

namespace {

struct Cursor {
    std::string_view src;
    std::size_t pos = 0;
    long line = 1;
    long col = 1;

    bool done() const { return pos >= src.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    bool match(std::string_view s) const { return src.substr(pos, s.size()) == s; }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
};

bool is_string_prefix(std::string_view word) {
    if (word.empty() || word.size() > 2)
        return false;
    for (char c : word) {
        char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (l != 'r' && l != 'b' && l != 'f' && l != 'u')
            return false;
    }
    return true;
}

// Consumes a quoted literal starting at the opening quote, returning the
// inner text. Escape sequences stay raw except the quote-protection cases.
std::string consume_string(Cursor& c, const LexerRules& rules) {
    char quote = c.peek();
    bool triple = false;
    if (rules.triple_quotes && c.peek(1) == quote && c.peek(2) == quote) {
        triple = true;
        c.advance();
        c.advance();
    }
    c.advance(); // opening quote
    std::string inner;
    while (!c.done()) {
        if (quote != '`' && c.peek() == '\\') {
            inner += c.advance();
            if (!c.done())
                inner += c.advance();
            continue;
        }
        if (c.peek() == quote) {
            if (!triple) {
                c.advance();
                return inner;
            }
            if (c.peek(1) == quote && c.peek(2) == quote) {
                c.advance();
                c.advance();
                c.advance();
                return inner;
            }
        }
        inner += c.advance();
    }
    return inner; // unterminated: runs to EOF
}

const char* kMultiCharOps[] = {"**=", "//=", ">>=", "<<=", "==", "!=", "<=", ">=", "+=",
                               "-=",  "*=",  "/=",  "%=",  "&=", "|=", "^=", ":=", "->",
                               "**",  "//",  ">>",  "<<",  "&&", "||", "<-", "..."};

} // namespace

std::vector<Token> lex(std::string_view content, const LexerRules& rules) {
    std::vector<Token> tokens;
    Cursor c{content};

    while (!c.done()) {
        char ch = c.peek();
        long line = c.line, col = c.col;

        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\f' || ch == '\v') {
            c.advance();
            continue;
        }
        if (!rules.line_comment.empty() && c.match(rules.line_comment)) {
            std::string body;
            while (!c.done() && c.peek() != '\n')
                body += c.advance();
            tokens.push_back({TokenKind::Comment, body.substr(rules.line_comment.size()), line, col});
            continue;
        }
        if (rules.block_comments && c.match("/*")) {
            std::string body;
            c.advance();
            c.advance();
            while (!c.done() && !c.match("*/"))
                body += c.advance();
            if (!c.done()) {
                c.advance();
                c.advance();
            }
            tokens.push_back({TokenKind::Comment, body, line, col});
            continue;
        }
        if (ch == '"' || (rules.single_quote_strings && ch == '\'') ||
            (rules.backtick_strings && ch == '`')) {
            std::string inner = consume_string(c, rules);
            tokens.push_back({TokenKind::String, inner, line, col});
            continue;
        }
        if (text::is_identifier_start(ch)) {
            std::string word;
            while (!c.done() && text::is_identifier_char(c.peek()))
                word += c.advance();
            char next = c.peek();
            if (rules.triple_quotes && is_string_prefix(word) && (next == '"' || next == '\'')) {
                std::string inner = consume_string(c, rules);
                tokens.push_back({TokenKind::String, inner, line, col});
                continue;
            }
            TokenKind kind = rules.keywords.count(word) ? TokenKind::Keyword : TokenKind::Identifier;
            tokens.push_back({kind, std::move(word), line, col});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (!c.done() && (text::is_identifier_char(c.peek()) || c.peek() == '.'))
                num += c.advance();
            tokens.push_back({TokenKind::Number, std::move(num), line, col});
            continue;
        }
        bool matched_op = false;
        for (const char* op : kMultiCharOps) {
            if (c.match(op)) {
                for (std::size_t k = 0; op[k]; ++k)
                    c.advance();
                tokens.push_back({TokenKind::Punct, op, line, col});
                matched_op = true;
                break;
            }
        }
        if (matched_op)
            continue;
        tokens.push_back({TokenKind::Punct, std::string(1, c.advance()), line, col});
    }
    return tokens;
}

std::vector<Token> lex_code(std::string_view content, const LexerRules& rules) {
    std::vector<Token> tokens = lex(content, rules);
    std::erase_if(tokens, [](const Token& t) { return t.kind == TokenKind::Comment; });
    return tokens;
}

} // namespace fixcrew::ckg
