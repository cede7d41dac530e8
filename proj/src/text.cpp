// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/text.hpp"

#include <algorithm>
#include <cctype>

namespace fixcrew::text {

Lines split_lines(std::string_view content) {
    Lines out;
    if (content.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t nl = content.find('\n', pos);
        if (nl == std::string_view::npos) {
            out.lines.emplace_back(content.substr(pos));
            out.trailing_newline = false;
            return out;
        }
        out.lines.emplace_back(content.substr(pos, nl - pos));
        pos = nl + 1;
        if (pos == content.size()) {
            out.trailing_newline = true;
            return out;
        }
    }
    return out;
}

std::string join_lines(const std::vector<std::string>& lines, bool trailing_newline) {
    std::string out;
    std::size_t total = 0;
    for (const auto& l : lines)
        total += l.size() + 1;
    out.reserve(total);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out += lines[i];
        if (i + 1 < lines.size() || trailing_newline)
            out += '\n';
    }
    return out;
}

static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string_view ltrim(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && is_space(s[i]))
        ++i;
    return s.substr(i);
}

std::string_view rtrim(std::string_view s) {
    std::size_t n = s.size();
    while (n > 0 && is_space(s[n - 1]))
        --n;
    return s.substr(0, n);
}

std::string_view trim(std::string_view s) {
    return rtrim(ltrim(s));
}

std::string_view leading_whitespace(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
        ++i;
    return s.substr(0, i);
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<IdentifierHit> identifiers_on_line(std::string_view line) {
    std::vector<IdentifierHit> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_identifier_start(line[i])) {
            std::size_t start = i;
            while (i < line.size() && is_identifier_char(line[i]))
                ++i;
            out.push_back({std::string(line.substr(start, i - start)), start + 1});
        } else {
            ++i;
        }
    }
    return out;
}

std::vector<std::string> split_identifier_words(std::string_view identifier) {
    std::vector<std::string> words;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            words.push_back(to_lower(current));
            current.clear();
        }
    };
    for (std::size_t i = 0; i < identifier.size(); ++i) {
        char c = identifier[i];
        if (c == '_') {
            flush();
            continue;
        }
        bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
        if (upper && !current.empty()) {
            char prev = current.back();
            bool prev_upper = std::isupper(static_cast<unsigned char>(prev)) != 0;
            bool next_lower = i + 1 < identifier.size() &&
                              std::islower(static_cast<unsigned char>(identifier[i + 1]));
            // boundary at lower->Upper and at the last capital of an acronym
            if (!prev_upper || next_lower)
                flush();
        }
        bool digit = std::isdigit(static_cast<unsigned char>(c)) != 0;
        bool prev_digit = !current.empty() && std::isdigit(static_cast<unsigned char>(current.back()));
        if (digit != prev_digit && !current.empty() && digit)
            flush();
        if (!digit && prev_digit)
            flush();
        current += c;
    }
    flush();
    return words;
}

std::vector<std::string> query_words(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& hit : identifiers_on_line(text)) {
        auto words = split_identifier_words(hit.token);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.empty())
        return b.size();
    if (b.empty())
        return a.size();
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

double line_similarity(std::string_view a, std::string_view b) {
    std::string_view ta = trim(a);
    std::string_view tb = trim(b);
    std::size_t max_len = std::max(ta.size(), tb.size());
    if (max_len == 0)
        return 1.0;
    std::size_t d = levenshtein(ta, tb);
    return 1.0 - static_cast<double>(d) / static_cast<double>(max_len);
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool contains(std::string_view haystack, std::string_view needle) {
    return haystack.find(needle) != std::string_view::npos;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
    if (from.empty())
        return s;
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

std::string normalize_whitespace(std::string_view s) {
    std::string out;
    bool in_ws = true; // trims leading whitespace
    for (char c : s) {
        if (is_space(c)) {
            if (!in_ws)
                out += ' ';
            in_ws = true;
        } else {
            out += c;
            in_ws = false;
        }
    }
    while (!out.empty() && out.back() == ' ')
        out.pop_back();
    return out;
}

} // namespace fixcrew::text
