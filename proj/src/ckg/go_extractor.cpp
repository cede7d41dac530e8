// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors
//
// Structural extractor for the brace-structured language (Go). Walks the
// token stream at brace depth zero for declarations and scans declaration
// bodies for call and reference sites.

#include "fixcrew/ckg/extractor.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <map>

namespace fixcrew::ckg {

namespace {

struct TokenView {
    const std::vector<Token>& all;
    std::vector<std::size_t> code; // indices of non-comment tokens

    explicit TokenView(const std::vector<Token>& tokens) : all(tokens) {
        for (std::size_t i = 0; i < tokens.size(); ++i)
            if (tokens[i].kind != TokenKind::Comment)
                code.push_back(i);
    }
    const Token& at(std::size_t ci) const { return all[code[ci]]; }
    std::size_t size() const { return code.size(); }
};

bool is_punct(const Token& t, std::string_view p) {
    return t.kind == TokenKind::Punct && t.text == p;
}
bool is_keyword(const Token& t, std::string_view k) {
    return t.kind == TokenKind::Keyword && t.text == k;
}

// Index of the token matching the opener at `open_ci`, or size() if
// unbalanced.
std::size_t match_forward(const TokenView& v, std::size_t open_ci, std::string_view open,
                          std::string_view close) {
    int depth = 0;
    for (std::size_t i = open_ci; i < v.size(); ++i) {
        if (is_punct(v.at(i), open))
            ++depth;
        else if (is_punct(v.at(i), close) && --depth == 0)
            return i;
    }
    return v.size();
}

class GoExtractor final : public Extractor {
public:
    std::string_view language() const override { return "go"; }
    bool handles(std::string_view rel_path) const override {
        return text::ends_with(rel_path, ".go");
    }
    const LexerRules& rules() const override { return go_rules(); }

    FileParse parse(std::string_view content) const override;

    bool import_matches(std::string_view module, std::string_view /*importer*/,
                        std::string_view candidate_path) const override {
        // Go import paths are module-rooted; the indexed file's directory must
        // be a segment-aligned suffix of the import string.
        std::size_t slash = candidate_path.rfind('/');
        if (slash == std::string_view::npos)
            return false; // top-level files belong to no importable package here
        std::string_view dir = candidate_path.substr(0, slash);
        if (module == dir)
            return true;
        return text::ends_with(module, std::string("/") + std::string(dir));
    }
};

struct DocIndex {
    // line -> comment text, only for lines that carry nothing but the comment
    std::map<long, std::string> pure_comment_lines;

    DocIndex(const std::vector<Token>& tokens) {
        std::map<long, bool> has_code;
        for (const auto& t : tokens)
            if (t.kind != TokenKind::Comment)
                has_code[t.line] = true;
        for (const auto& t : tokens)
            if (t.kind == TokenKind::Comment && !has_code.count(t.line))
                pure_comment_lines[t.line] = std::string(text::trim(t.text));
    }

    std::string doc_above(long decl_line) const {
        std::vector<std::string> parts;
        for (long l = decl_line - 1; l >= 1; --l) {
            auto it = pure_comment_lines.find(l);
            if (it == pure_comment_lines.end())
                break;
            parts.push_back(it->second);
        }
        std::reverse(parts.begin(), parts.end());
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += '\n';
            out += parts[i];
        }
        return out;
    }
};

std::string first_line_signature(const std::vector<std::string>& lines, long decl_line) {
    if (decl_line < 1 || decl_line > static_cast<long>(lines.size()))
        return "";
    std::string sig(text::trim(lines[static_cast<std::size_t>(decl_line - 1)]));
    if (text::ends_with(sig, "{"))
        sig = std::string(text::rtrim(std::string_view(sig).substr(0, sig.size() - 1)));
    return sig;
}

} // namespace

FileParse GoExtractor::parse(std::string_view content) const {
    if (content.find('\0') != std::string_view::npos)
        throw Error(ErrorCode::ParseFailure, "binary or non-text content");
    FileParse out;
    auto tokens = lex(content, go_rules());
    TokenView v(tokens);
    DocIndex docs(tokens);
    auto raw = text::split_lines(content);

    // Body spans to scan for call/reference sites once declarations exist.
    struct BodyRange {
        int entity;
        std::size_t begin_ci, end_ci; // inclusive token range
        std::size_t name_ci;          // the declared name itself; not a call site
    };
    std::vector<BodyRange> bodies;
    std::vector<std::pair<int, std::string>> method_receivers; // entity idx -> receiver type

    std::size_t i = 0;
    while (i < v.size()) {
        const Token& t = v.at(i);

        if (is_keyword(t, "import")) {
            if (i + 1 < v.size() && is_punct(v.at(i + 1), "(")) {
                std::size_t close = match_forward(v, i + 1, "(", ")");
                for (std::size_t j = i + 2; j < close && j < v.size(); ++j)
                    if (v.at(j).kind == TokenKind::String)
                        out.imports.push_back({v.at(j).text, v.at(j).line});
                i = close + 1;
            } else if (i + 1 < v.size() && v.at(i + 1).kind == TokenKind::String) {
                out.imports.push_back({v.at(i + 1).text, v.at(i + 1).line});
                i += 2;
            } else {
                ++i;
            }
            continue;
        }

        if (is_keyword(t, "type") && i + 1 < v.size() && v.at(i + 1).kind == TokenKind::Identifier) {
            const Token& name = v.at(i + 1);
            LocalEntity e;
            e.name = name.text;
            e.start_line = t.line;
            e.end_line = t.line;
            e.doc = docs.doc_above(t.line);
            e.signature = first_line_signature(raw.lines, t.line);
            bool is_struct = i + 2 < v.size() && is_keyword(v.at(i + 2), "struct");
            e.kind = is_struct ? EntityKind::Struct : EntityKind::Class;

            std::size_t body_open = i + 2;
            while (body_open < v.size() && !is_punct(v.at(body_open), "{") &&
                   v.at(body_open).line == t.line)
                ++body_open;
            int struct_idx = static_cast<int>(out.entities.size());
            if (body_open < v.size() && is_punct(v.at(body_open), "{")) {
                std::size_t close = match_forward(v, body_open, "{", "}");
                e.end_line = close < v.size() ? v.at(close).line : e.start_line;
                out.entities.push_back(e);
                if (is_struct) {
                    // field lines: leading identifiers of each line inside the
                    // braces become Variable members when a type follows
                    long cur_line = -1;
                    for (std::size_t j = body_open + 1; j < close; ++j) {
                        const Token& ft = v.at(j);
                        if (ft.line == cur_line)
                            continue;
                        cur_line = ft.line;
                        if (ft.kind != TokenKind::Identifier)
                            continue;
                        // a lone identifier (possibly dotted) is an embedding
                        bool has_following_type =
                            j + 1 < close && v.at(j + 1).line == ft.line && !is_punct(v.at(j + 1), ".");
                        if (!has_following_type)
                            continue;
                        LocalEntity field;
                        field.kind = EntityKind::Variable;
                        field.name = ft.text;
                        field.start_line = field.end_line = ft.line;
                        field.parent = struct_idx;
                        out.entities.push_back(field);
                    }
                }
                i = close + 1;
            } else {
                out.entities.push_back(e);
                ++i;
            }
            continue;
        }

        if (is_keyword(t, "func")) {
            LocalEntity e;
            e.start_line = t.line;
            e.doc = docs.doc_above(t.line);
            e.signature = first_line_signature(raw.lines, t.line);
            std::size_t j = i + 1;
            std::string receiver;
            if (j < v.size() && is_punct(v.at(j), "(")) {
                std::size_t close = match_forward(v, j, "(", ")");
                for (std::size_t k = j + 1; k < close; ++k)
                    if (v.at(k).kind == TokenKind::Identifier)
                        receiver = v.at(k).text; // last identifier is the type
                j = close + 1;
            }
            if (j >= v.size() || v.at(j).kind != TokenKind::Identifier) {
                ++i;
                continue;
            }
            e.name = v.at(j).text;
            e.kind = receiver.empty() ? EntityKind::Function : EntityKind::Method;

            // body opens at the first top-level '{' after the signature
            std::size_t body_open = j + 1;
            int paren_depth = 0;
            while (body_open < v.size()) {
                const Token& bt = v.at(body_open);
                if (is_punct(bt, "(") || is_punct(bt, "["))
                    ++paren_depth;
                else if (is_punct(bt, ")") || is_punct(bt, "]"))
                    --paren_depth;
                else if (is_punct(bt, "{") && paren_depth == 0)
                    break;
                ++body_open;
            }
            int idx = static_cast<int>(out.entities.size());
            if (body_open < v.size()) {
                std::size_t close = match_forward(v, body_open, "{", "}");
                e.end_line = close < v.size() ? v.at(close).line : e.start_line;
                out.entities.push_back(e);
                bodies.push_back({idx, i, close == v.size() ? v.size() - 1 : close, j});
                if (!receiver.empty())
                    method_receivers.emplace_back(idx, receiver);
                i = close + 1;
            } else {
                e.end_line = e.start_line;
                out.entities.push_back(e);
                if (!receiver.empty())
                    method_receivers.emplace_back(idx, receiver);
                i = body_open;
            }
            continue;
        }

        if ((is_keyword(t, "var") || is_keyword(t, "const"))) {
            if (i + 1 < v.size() && is_punct(v.at(i + 1), "(")) {
                std::size_t close = match_forward(v, i + 1, "(", ")");
                long cur_line = -1;
                for (std::size_t j = i + 2; j < close; ++j) {
                    const Token& vt = v.at(j);
                    if (vt.line == cur_line || vt.kind != TokenKind::Identifier)
                        continue;
                    cur_line = vt.line;
                    LocalEntity var;
                    var.kind = EntityKind::Variable;
                    var.name = vt.text;
                    var.start_line = var.end_line = vt.line;
                    var.doc = docs.doc_above(vt.line);
                    out.entities.push_back(var);
                }
                i = close + 1;
            } else if (i + 1 < v.size() && v.at(i + 1).kind == TokenKind::Identifier) {
                LocalEntity var;
                var.kind = EntityKind::Variable;
                var.name = v.at(i + 1).text;
                var.start_line = var.end_line = t.line;
                var.doc = docs.doc_above(t.line);
                var.signature = first_line_signature(raw.lines, t.line);
                out.entities.push_back(var);
                i += 2;
            } else {
                ++i;
            }
            continue;
        }

        ++i;
    }

    // Methods hang off their receiver type when it is declared in this file.
    for (auto& [idx, receiver] : method_receivers) {
        for (std::size_t k = 0; k < out.entities.size(); ++k) {
            if (out.entities[k].name == receiver &&
                (out.entities[k].kind == EntityKind::Struct ||
                 out.entities[k].kind == EntityKind::Class)) {
                out.entities[static_cast<std::size_t>(idx)].parent = static_cast<int>(k);
                break;
            }
        }
    }

    for (const auto& body : bodies) {
        for (std::size_t ci = body.begin_ci; ci <= body.end_ci && ci < v.size(); ++ci) {
            const Token& tok = v.at(ci);
            if (tok.kind != TokenKind::Identifier || ci == body.name_ci)
                continue;
            if (ci + 1 <= body.end_ci && is_punct(v.at(ci + 1), "("))
                out.calls.push_back({body.entity, tok.text, tok.line});
            else
                out.references.push_back({body.entity, tok.text, tok.line});
        }
    }
    return out;
}

namespace {
const GoExtractor kGoExtractor;
} // namespace

const Extractor* go_extractor() {
    return &kGoExtractor;
}

} // namespace fixcrew::ckg
