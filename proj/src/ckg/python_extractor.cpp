// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors
//
// Structural extractor for the indentation-structured language (Python).
// Logical lines are grouped by bracket depth; def/class suites are tracked
// with an indentation stack.

#include "fixcrew/ckg/extractor.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <map>

namespace fixcrew::ckg {

namespace {

long indent_width(std::string_view line) {
    long col = 0;
    for (char c : line) {
        if (c == ' ')
            ++col;
        else if (c == '\t')
            col += 8 - (col % 8);
        else
            break;
    }
    return col;
}

struct LineInfo {
    long indent = 0;
    bool blank = true;        // no code tokens (blank or comment-only)
    bool continuation = false; // starts inside brackets or after a backslash
    std::vector<std::size_t> tokens; // indices into the code token vector
};

bool is_punct(const Token& t, std::string_view p) {
    return t.kind == TokenKind::Punct && t.text == p;
}
bool is_keyword(const Token& t, std::string_view k) {
    return t.kind == TokenKind::Keyword && t.text == k;
}

int bracket_delta(const Token& t) {
    if (t.kind != TokenKind::Punct)
        return 0;
    if (t.text == "(" || t.text == "[" || t.text == "{")
        return 1;
    if (t.text == ")" || t.text == "]" || t.text == "}")
        return -1;
    return 0;
}

class PythonExtractor final : public Extractor {
public:
    std::string_view language() const override { return "python"; }
    bool handles(std::string_view rel_path) const override {
        return text::ends_with(rel_path, ".py");
    }
    const LexerRules& rules() const override { return python_rules(); }

    FileParse parse(std::string_view content) const override;
    std::vector<std::string> normalized_tokens(std::string_view content) const override;

    bool import_matches(std::string_view module, std::string_view importer_path,
                        std::string_view candidate_path) const override {
        // "a.b" resolves to a/b.py or a/b/__init__.py; leading dots walk up
        // from the importer's directory.
        std::string mod(module);
        std::string base;
        if (!mod.empty() && mod[0] == '.') {
            std::size_t dots = 0;
            while (dots < mod.size() && mod[dots] == '.')
                ++dots;
            std::string dir(importer_path);
            std::size_t slash = dir.rfind('/');
            dir = slash == std::string::npos ? "" : dir.substr(0, slash);
            for (std::size_t k = 1; k < dots; ++k) {
                slash = dir.rfind('/');
                dir = slash == std::string::npos ? "" : dir.substr(0, slash);
            }
            base = dir;
            mod = mod.substr(dots);
        }
        std::string rel = text::replace_all(mod, ".", "/");
        std::string stem = base.empty() ? rel : base + (rel.empty() ? "" : "/" + rel);
        if (candidate_path == stem + ".py" || candidate_path == stem + "/__init__.py")
            return true;
        // absolute imports may also be rooted anywhere above the importer
        return !base.empty() ? false
                             : text::ends_with(candidate_path, "/" + rel + ".py") ||
                                   text::ends_with(candidate_path, "/" + rel + "/__init__.py");
    }
};

} // namespace

FileParse PythonExtractor::parse(std::string_view content) const {
    if (content.find('\0') != std::string_view::npos)
        throw Error(ErrorCode::ParseFailure, "binary or non-text content");
    FileParse out;
    auto raw = text::split_lines(content);
    auto all_tokens = lex(content, python_rules());

    std::vector<Token> code;
    for (auto& t : all_tokens)
        if (t.kind != TokenKind::Comment)
            code.push_back(t);

    // Per-line layout facts.
    std::vector<LineInfo> info(raw.lines.size() + 1);
    for (std::size_t l = 1; l <= raw.lines.size(); ++l)
        info[l].indent = indent_width(raw.lines[l - 1]);
    {
        int depth = 0;
        long prev_code_line = 0;
        bool prev_backslash = false;
        for (std::size_t ti = 0; ti < code.size(); ++ti) {
            long l = code[ti].line;
            auto& li = info[static_cast<std::size_t>(l)];
            if (li.blank) {
                li.blank = false;
                li.continuation = depth > 0 || (prev_backslash && prev_code_line == l - 1);
            }
            li.tokens.push_back(ti);
            depth += bracket_delta(code[ti]);
            prev_code_line = l;
            std::string_view raw_line = raw.lines[static_cast<std::size_t>(l - 1)];
            prev_backslash = text::ends_with(text::rtrim(raw_line), "\\");
        }
    }

    struct Scope {
        int entity; // local index
        long indent;
        bool is_class;
        long last_code_line;
    };
    std::vector<Scope> stack;

    auto close_scopes_to = [&](long indent) {
        while (!stack.empty() && indent <= stack.back().indent) {
            out.entities[static_cast<std::size_t>(stack.back().entity)].end_line =
                stack.back().last_code_line;
            stack.pop_back();
        }
    };

    // Docstring detection: remember entities expecting one.
    int awaiting_doc = -1;

    for (long l = 1; l <= static_cast<long>(raw.lines.size()); ++l) {
        LineInfo& li = info[static_cast<std::size_t>(l)];
        if (li.blank)
            continue;
        if (li.continuation) {
            if (!stack.empty())
                stack.back().last_code_line = l;
            continue;
        }
        close_scopes_to(li.indent);
        for (auto& s : stack)
            s.last_code_line = l;

        const Token& first = code[li.tokens.front()];

        if (awaiting_doc >= 0) {
            if (first.kind == TokenKind::String)
                out.entities[static_cast<std::size_t>(awaiting_doc)].doc =
                    std::string(text::trim(first.text));
            awaiting_doc = -1;
        }

        std::size_t ti = li.tokens.front();
        bool async_def = is_keyword(first, "async") && li.tokens.size() > 1 &&
                         is_keyword(code[li.tokens[1]], "def");
        if (async_def)
            ti = li.tokens[1];

        const Token& head = code[ti];
        if (is_keyword(head, "def") || is_keyword(head, "class")) {
            bool is_class = head.text == "class";
            if (ti + 1 >= code.size() || code[ti + 1].kind != TokenKind::Identifier)
                continue;
            LocalEntity e;
            e.name = code[ti + 1].text;
            e.start_line = l;
            e.end_line = l;
            e.signature = std::string(text::trim(raw.lines[static_cast<std::size_t>(l - 1)]));
            if (!e.signature.empty() && e.signature.back() == ':')
                e.signature.pop_back();
            if (is_class)
                e.kind = EntityKind::Class;
            else
                e.kind = (!stack.empty() && stack.back().is_class) ? EntityKind::Method
                                                                   : EntityKind::Function;
            e.parent = stack.empty() ? -1 : stack.back().entity;
            int idx = static_cast<int>(out.entities.size());
            out.entities.push_back(e);

            if (is_class && ti + 2 < code.size() && is_punct(code[ti + 2], "(")) {
                // base list: identifiers directly followed by ',' or ')'
                int depth = 0;
                for (std::size_t k = ti + 2; k < code.size(); ++k) {
                    depth += bracket_delta(code[k]);
                    if (depth == 0)
                        break;
                    if (code[k].kind == TokenKind::Identifier && k + 1 < code.size() &&
                        (is_punct(code[k + 1], ",") || is_punct(code[k + 1], ")")) &&
                        !(k > 0 && is_punct(code[k - 1], "=")))
                        out.inherits.push_back({idx, code[k].text, code[k].line});
                }
            }
            stack.push_back({idx, li.indent, is_class, l});
            awaiting_doc = idx;
            continue;
        }

        if (is_keyword(head, "import") || is_keyword(head, "from")) {
            // "import a.b as c, d" / "from .pkg import x"
            std::string module;
            bool from_form = head.text == "from";
            for (std::size_t k = ti + 1; k < code.size() && code[k].line == l; ++k) {
                const Token& tk = code[k];
                if (is_keyword(tk, "import") && from_form)
                    break;
                if (tk.kind == TokenKind::Identifier || is_punct(tk, ".")) {
                    module += tk.text;
                } else if (is_punct(tk, ",") && !from_form) {
                    if (!module.empty())
                        out.imports.push_back({module, l});
                    module.clear();
                } else if (is_keyword(tk, "as")) {
                    if (!from_form) {
                        if (!module.empty())
                            out.imports.push_back({module, l});
                        module.clear();
                    }
                    ++k; // skip alias
                } else {
                    break;
                }
            }
            if (!module.empty())
                out.imports.push_back({module, l});
            continue;
        }

        // module- or class-level assignment -> Variable entities
        bool at_module = stack.empty();
        bool in_class = !stack.empty() && stack.back().is_class;
        if ((at_module || in_class) && first.kind == TokenKind::Identifier) {
            std::vector<std::string> targets;
            bool ok = false;
            for (std::size_t k = 0; k < li.tokens.size(); ++k) {
                const Token& tk = code[li.tokens[k]];
                if (tk.kind == TokenKind::Identifier) {
                    if (k + 1 < li.tokens.size()) {
                        const Token& nx = code[li.tokens[k + 1]];
                        if (is_punct(nx, ",")) {
                            targets.push_back(tk.text);
                            ++k;
                            continue;
                        }
                        if (is_punct(nx, "=") || (nx.kind == TokenKind::Punct &&
                                                  nx.text.size() >= 2 && nx.text.back() == '=' &&
                                                  nx.text != "==" && nx.text != "!=" &&
                                                  nx.text != "<=" && nx.text != ">=")) {
                            targets.push_back(tk.text);
                            ok = is_punct(nx, "=");
                            break;
                        }
                        if (is_punct(nx, ":")) { // annotated: NAME: type = ...
                            targets.push_back(tk.text);
                            for (std::size_t q = k + 2; q < li.tokens.size(); ++q)
                                if (is_punct(code[li.tokens[q]], "=")) {
                                    ok = true;
                                    break;
                                }
                            break;
                        }
                    }
                    break;
                }
                break;
            }
            if (ok) {
                for (auto& name : targets) {
                    LocalEntity var;
                    var.kind = EntityKind::Variable;
                    var.name = name;
                    var.start_line = var.end_line = l;
                    var.parent = in_class ? stack.back().entity : -1;
                    var.signature = std::string(text::trim(raw.lines[static_cast<std::size_t>(l - 1)]));
                    out.entities.push_back(var);
                }
            }
        }
    }
    close_scopes_to(0);

    // Call/reference sites inside def/method spans (innermost owner wins).
    for (std::size_t ti = 0; ti < code.size(); ++ti) {
        const Token& tok = code[ti];
        if (tok.kind != TokenKind::Identifier)
            continue;
        int owner = -1;
        long best_span = -1;
        for (std::size_t e = 0; e < out.entities.size(); ++e) {
            const LocalEntity& ent = out.entities[e];
            if (ent.kind != EntityKind::Function && ent.kind != EntityKind::Method)
                continue;
            if (tok.line < ent.start_line || tok.line > ent.end_line)
                continue;
            long span = ent.end_line - ent.start_line;
            if (best_span < 0 || span < best_span) {
                best_span = span;
                owner = static_cast<int>(e);
            }
        }
        if (owner < 0)
            continue;
        if (ti > 0 && (is_keyword(code[ti - 1], "def") || is_keyword(code[ti - 1], "class")))
            continue; // the declaration itself
        if (ti + 1 < code.size() && is_punct(code[ti + 1], "("))
            out.calls.push_back({owner, tok.text, tok.line});
        else
            out.references.push_back({owner, tok.text, tok.line});
    }
    return out;
}

std::vector<std::string> PythonExtractor::normalized_tokens(std::string_view content) const {
    // Layout is semantic here: keep one indent marker per logical line.
    auto raw = text::split_lines(content);
    auto code = lex_code(content, python_rules());
    std::vector<std::string> out;
    int depth = 0;
    long cur_line = 0;
    for (const auto& t : code) {
        if (t.line != cur_line && depth == 0) {
            cur_line = t.line;
            out.push_back("I:" + std::to_string(indent_width(raw.lines[static_cast<std::size_t>(
                                     t.line - 1)])));
        }
        depth += bracket_delta(t);
        out.push_back(std::to_string(static_cast<int>(t.kind)) + ":" + t.text);
    }
    return out;
}

namespace {
const PythonExtractor kPythonExtractor;
} // namespace

const Extractor* python_extractor() {
    return &kPythonExtractor;
}

} // namespace fixcrew::ckg
