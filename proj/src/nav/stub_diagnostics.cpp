// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/nav/stub_diagnostics.hpp"

#include "fixcrew/ckg/lexer.hpp"
#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <set>

namespace fixcrew::nav {

namespace {

using ckg::Token;
using ckg::TokenKind;

bool is_punct(const Token& t, std::string_view p) {
    return t.kind == TokenKind::Punct && t.text == p;
}
bool is_keyword(const Token& t, std::string_view k) {
    return t.kind == TokenKind::Keyword && t.text == k;
}

char matching_open(char close) {
    switch (close) {
    case ')': return '(';
    case ']': return '[';
    case '}': return '{';
    }
    return '\0';
}

void check_brackets(const std::vector<Token>& code, const std::string& path,
                    std::vector<Diagnostic>& out) {
    std::vector<const Token*> stack;
    for (const auto& t : code) {
        if (t.kind != TokenKind::Punct || t.text.size() != 1)
            continue;
        char c = t.text[0];
        if (c == '(' || c == '[' || c == '{') {
            stack.push_back(&t);
        } else if (c == ')' || c == ']' || c == '}') {
            if (stack.empty() || stack.back()->text[0] != matching_open(c)) {
                out.push_back({path, t.line, Severity::Error, "unmatched-bracket",
                               std::string("unmatched '") + c + "'"});
                if (!stack.empty())
                    stack.pop_back();
            } else {
                stack.pop_back();
            }
        }
    }
    for (const Token* open : stack)
        out.push_back({path, open->line, Severity::Error, "unclosed-bracket",
                       "unclosed bracket '" + open->text + "'"});
}

const std::set<std::string>& python_builtins() {
    static const std::set<std::string> names = {
        "abs",        "all",       "any",        "bool",      "bytes",     "callable",
        "chr",        "classmethod", "dict",     "dir",       "divmod",    "enumerate",
        "filter",     "float",     "format",     "frozenset", "getattr",   "hasattr",
        "hash",       "hex",       "id",         "input",     "int",       "isinstance",
        "issubclass", "iter",      "len",        "list",      "map",       "max",
        "min",        "next",      "object",     "open",      "ord",       "pow",
        "print",      "property",  "range",      "repr",      "reversed",  "round",
        "set",        "setattr",   "slice",      "sorted",    "staticmethod", "str",
        "sum",        "super",     "tuple",      "type",      "vars",      "zip",
        "Exception",  "BaseException", "ValueError", "TypeError", "KeyError",
        "IndexError", "AttributeError", "RuntimeError", "StopIteration",
        "ZeroDivisionError", "AssertionError", "NotImplementedError", "OSError",
        "IOError",    "FileNotFoundError", "NameError", "ArithmeticError", "OverflowError",
        "__name__",   "__file__",  "__doc__",    "self",      "cls",       "NotImplemented",
        "Ellipsis",   "exec",      "eval",       "globals",   "locals",    "compile",
        "memoryview", "bytearray", "complex",    "delattr",   "breakpoint",
    };
    return names;
}

bool is_assignment_op(const Token& t) {
    if (t.kind != TokenKind::Punct)
        return false;
    if (t.text == "=")
        return true;
    return t.text.size() >= 2 && t.text.back() == '=' && t.text != "==" && t.text != "!=" &&
           t.text != "<=" && t.text != ">=";
}

void check_python_undefined(const std::vector<Token>& code, const std::string& path,
                            std::vector<Diagnostic>& out) {
    std::set<std::string> defined;

    auto define = [&defined](const std::string& name) { defined.insert(name); };

    for (std::size_t i = 0; i < code.size(); ++i) {
        const Token& t = code[i];
        if (t.kind == TokenKind::Keyword &&
            (t.text == "def" || t.text == "class" || t.text == "as" || t.text == "global" ||
             t.text == "nonlocal")) {
            if (i + 1 < code.size() && code[i + 1].kind == TokenKind::Identifier)
                define(code[i + 1].text);
            // def parameters: identifiers right after '(' ',' '*' '**'
            if (t.text == "def" && i + 2 < code.size() && is_punct(code[i + 2], "(")) {
                int depth = 0;
                for (std::size_t k = i + 2; k < code.size(); ++k) {
                    if (is_punct(code[k], "("))
                        ++depth;
                    else if (is_punct(code[k], ")") && --depth == 0)
                        break;
                    if (code[k].kind == TokenKind::Identifier && k > 0 &&
                        (is_punct(code[k - 1], "(") || is_punct(code[k - 1], ",") ||
                         is_punct(code[k - 1], "*") || is_punct(code[k - 1], "**")))
                        define(code[k].text);
                }
            }
            continue;
        }
        if (t.kind == TokenKind::Keyword && t.text == "import") {
            // import a.b as c / from m import x, y as z
            for (std::size_t k = i + 1; k < code.size() && code[k].line == t.line; ++k) {
                if (code[k].kind == TokenKind::Identifier) {
                    bool aliased = k + 1 < code.size() && is_keyword(code[k + 1], "as");
                    bool dotted_tail = k + 1 < code.size() && is_punct(code[k + 1], ".");
                    if (!aliased && !dotted_tail && (k == i + 1 || !is_punct(code[k - 1], ".")))
                        define(code[k].text);
                }
            }
            continue;
        }
        if (t.kind == TokenKind::Keyword && (t.text == "for" || t.text == "lambda")) {
            std::string_view stop = t.text == "for" ? "in" : ":";
            for (std::size_t k = i + 1; k < code.size(); ++k) {
                if ((code[k].kind == TokenKind::Keyword && code[k].text == stop) ||
                    is_punct(code[k], std::string(stop)))
                    break;
                if (code[k].kind == TokenKind::Identifier &&
                    !(k > 0 && is_punct(code[k - 1], ".")))
                    define(code[k].text);
            }
            continue;
        }
        if (t.kind == TokenKind::Identifier) {
            bool attribute = i > 0 && is_punct(code[i - 1], ".");
            bool assigned = i + 1 < code.size() && is_assignment_op(code[i + 1]);
            // tuple targets: a, b = ...
            if (!assigned && !attribute) {
                std::size_t k = i;
                while (k + 2 < code.size() && is_punct(code[k + 1], ",") &&
                       code[k + 2].kind == TokenKind::Identifier)
                    k += 2;
                if (k != i && k + 1 < code.size() && is_assignment_op(code[k + 1]))
                    assigned = true;
            }
            // annotated assignment: NAME: type = ...
            if (!assigned && !attribute && i + 1 < code.size() && is_punct(code[i + 1], ":")) {
                for (std::size_t k = i + 2; k < code.size() && code[k].line == t.line; ++k)
                    if (is_punct(code[k], "=")) {
                        assigned = true;
                        break;
                    }
            }
            if (assigned && !attribute)
                define(t.text);
        }
    }

    // Tokens that belong to import statements are module names, not usages.
    std::vector<bool> in_import(code.size(), false);
    {
        int depth = 0;
        bool active = false;
        long stmt_line = 0;
        for (std::size_t i = 0; i < code.size(); ++i) {
            const Token& t = code[i];
            if (active && t.line != stmt_line && depth == 0)
                active = false;
            if (!active && t.kind == TokenKind::Keyword &&
                (t.text == "import" || t.text == "from"))
                active = true;
            if (active) {
                in_import[i] = true;
                stmt_line = t.line;
            }
            if (t.kind == TokenKind::Punct) {
                if (t.text == "(" || t.text == "[" || t.text == "{")
                    ++depth;
                else if (t.text == ")" || t.text == "]" || t.text == "}")
                    --depth;
            }
        }
    }

    std::set<std::string> reported;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const Token& t = code[i];
        if (t.kind != TokenKind::Identifier || in_import[i])
            continue;
        if (i > 0 && is_punct(code[i - 1], "."))
            continue; // attribute access
        if (i > 0 && (is_keyword(code[i - 1], "def") || is_keyword(code[i - 1], "class") ||
                      is_keyword(code[i - 1], "as")))
            continue;
        if (i + 1 < code.size() && is_assignment_op(code[i + 1]))
            continue; // target or keyword argument
        if (defined.count(t.text) || python_builtins().count(t.text))
            continue;
        if (reported.insert(t.text).second)
            out.push_back({path, t.line, Severity::Error, "undefined-name",
                           "undefined name '" + t.text + "'"});
    }
}

void check_python_blocks(std::string_view content, const std::vector<Token>& code,
                         const std::string& path, std::vector<Diagnostic>& out) {
    auto raw = text::split_lines(content);
    auto indent_of = [&raw](long line) {
        long col = 0;
        for (char c : raw.lines[static_cast<std::size_t>(line - 1)]) {
            if (c == ' ')
                ++col;
            else if (c == '\t')
                col += 8 - (col % 8);
            else
                break;
        }
        return col;
    };

    // group code tokens per line, tracking bracket depth at line starts
    std::vector<long> code_lines;
    std::vector<const Token*> last_token_on;
    std::vector<bool> continuation;
    {
        int depth = 0;
        long cur = 0;
        for (const auto& t : code) {
            if (t.line != cur) {
                code_lines.push_back(t.line);
                last_token_on.push_back(&t);
                continuation.push_back(depth > 0);
                cur = t.line;
            } else {
                last_token_on.back() = &t;
            }
            if (t.kind == TokenKind::Punct) {
                if (t.text == "(" || t.text == "[" || t.text == "{")
                    ++depth;
                else if (t.text == ")" || t.text == "]" || t.text == "}")
                    --depth;
            }
        }
    }

    for (std::size_t i = 0; i < code_lines.size(); ++i) {
        if (continuation[i])
            continue;
        if (!is_punct(*last_token_on[i], ":"))
            continue;
        // find the next non-continuation code line
        std::size_t j = i + 1;
        while (j < code_lines.size() && continuation[j])
            ++j;
        if (j >= code_lines.size() || indent_of(code_lines[j]) <= indent_of(code_lines[i]))
            out.push_back({path, code_lines[i], Severity::Error, "expected-block",
                           "expected an indented block after line " +
                               std::to_string(code_lines[i])});
    }
}

} // namespace

std::vector<Diagnostic> StubDiagnostics::collect(const std::string& path,
                                                 std::string_view content) {
    std::vector<Diagnostic> out;
    if (text::ends_with(path, ".py")) {
        auto code = ckg::lex_code(content, ckg::python_rules());
        check_brackets(code, path, out);
        check_python_blocks(content, code, path, out);
        check_python_undefined(code, path, out);
    } else if (text::ends_with(path, ".go")) {
        auto code = ckg::lex_code(content, ckg::go_rules());
        check_brackets(code, path, out);
    } else {
        throw Error(ErrorCode::BackendUnavailable, "no diagnostics backend for " + path);
    }
    std::sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.line != b.line)
            return a.line < b.line;
        if (a.severity != b.severity)
            return a.severity > b.severity;
        if (a.code != b.code)
            return a.code < b.code;
        return a.message < b.message;
    });
    return out;
}

std::string_view severity_name(Severity s) {
    switch (s) {
    case Severity::Fatal: return "Fatal";
    case Severity::Error: return "Error";
    case Severity::Warning: return "Warning";
    case Severity::Info: return "Info";
    case Severity::Hint: return "Hint";
    }
    return "?";
}

std::string_view resolve_tier_name(ResolveTier t) {
    switch (t) {
    case ResolveTier::ExactLine: return "ExactLine";
    case ResolveTier::NearbyLine: return "NearbyLine";
    case ResolveTier::OpenedFiles: return "OpenedFiles";
    }
    return "?";
}

} // namespace fixcrew::nav
