// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors
//
// Test-only reference implementations. These deliberately share no code with
// the library paths they check.

#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixcrew/patch/diff.hpp"

namespace oracle {

// Full-matrix edit distance, written independently of the library's
// two-row version.
inline std::size_t levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
    for (std::size_t i = 0; i <= a.size(); ++i)
        d[i][0] = i;
    for (std::size_t j = 0; j <= b.size(); ++j)
        d[0][j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t best = std::min(d[i - 1][j], d[i][j - 1]) + 1;
            best = std::min(best, d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u));
            d[i][j] = best;
        }
    return d[a.size()][b.size()];
}

inline std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n\f\v");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n\f\v");
    return s.substr(b, e - b + 1);
}

inline double line_sim(const std::string& a, const std::string& b) {
    std::string ta = trim_copy(a), tb = trim_copy(b);
    std::size_t mx = std::max(ta.size(), tb.size());
    if (mx == 0)
        return 1.0;
    return 1.0 - static_cast<double>(levenshtein(ta, tb)) / static_cast<double>(mx);
}

struct BestWindow {
    std::size_t start = 0; // 0-based
    double sum = -1.0;     // per-line similarity sum over the window
    int exact_hits = 0;    // verbatim occurrences of the search block
};

// Exhaustive best-window scan: every window, no pruning, first strictly
// better window wins (so earliest window wins ties).
inline BestWindow best_window(const std::vector<std::string>& file,
                              const std::vector<std::string>& search) {
    BestWindow best;
    if (search.empty() || file.size() < search.size())
        return best;
    for (std::size_t i = 0; i + search.size() <= file.size(); ++i) {
        double sum = 0.0;
        bool exact = true;
        for (std::size_t j = 0; j < search.size(); ++j) {
            sum += line_sim(search[j], file[i + j]);
            exact = exact && file[i + j] == search[j];
        }
        if (exact)
            ++best.exact_hits;
        if (sum > best.sum) {
            best.sum = sum;
            best.start = i;
        }
    }
    return best;
}

// Splits content into lines the same way the diff format thinks about them.
inline std::vector<std::string> split(const std::string& content, bool& trailing_nl) {
    std::vector<std::string> lines;
    trailing_nl = true;
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(content.substr(pos));
            trailing_nl = false;
            break;
        }
        lines.push_back(content.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

// Independent unified-diff application used to cross-check both the renderer
// and the library's applier.
inline std::string apply_diff(const std::string& old_content, const fixcrew::patch::UnifiedDiff& diff) {
    bool old_nl = true;
    std::vector<std::string> a = split(old_content, old_nl);
    if (diff.hunks.empty())
        return old_content;

    std::vector<std::string> out;
    std::size_t cursor = 0;
    for (const auto& h : diff.hunks) {
        std::size_t begin = h.old_len > 0 ? static_cast<std::size_t>(h.old_start - 1)
                                          : static_cast<std::size_t>(h.old_start);
        if (begin < cursor || begin > a.size())
            throw std::runtime_error("oracle: bad hunk position");
        while (cursor < begin)
            out.push_back(a[cursor++]);
        for (const auto& l : h.lines) {
            if (l.empty())
                throw std::runtime_error("oracle: empty hunk line");
            std::string body = l.substr(1);
            if (l[0] == ' ' || l[0] == '-') {
                if (cursor >= a.size() || a[cursor] != body)
                    throw std::runtime_error("oracle: context mismatch");
                if (l[0] == ' ')
                    out.push_back(body);
                ++cursor;
            } else if (l[0] == '+') {
                out.push_back(body);
            } else {
                throw std::runtime_error("oracle: bad prefix");
            }
        }
    }
    bool touched_eof = cursor >= a.size();
    while (cursor < a.size())
        out.push_back(a[cursor++]);

    bool trailing = touched_eof ? !diff.new_no_newline : old_nl;
    std::string joined;
    for (std::size_t i = 0; i < out.size(); ++i) {
        joined += out[i];
        if (i + 1 < out.size() || trailing)
            joined += '\n';
    }
    return joined;
}

// Deterministic random text helpers for the property suites.
class TextGen {
public:
    explicit TextGen(std::uint32_t seed) : rng_(seed) {}

    std::string word() {
        static const char* words[] = {"alpha", "beta",  "gamma", "delta", "value", "count",
                                      "index", "total", "name",  "node",  "edge",  "line"};
        return words[rng_() % 12];
    }

    std::string line(std::size_t max_words = 6) {
        std::size_t n = rng_() % (max_words + 1);
        std::string out;
        std::size_t indent = rng_() % 3;
        out.append(indent * 4, ' ');
        for (std::size_t i = 0; i < n; ++i) {
            if (i)
                out += ' ';
            out += word();
        }
        return out;
    }

    std::vector<std::string> lines(std::size_t count, std::size_t max_words = 6) {
        std::vector<std::string> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(line(max_words));
        return out;
    }

    std::uint32_t pick(std::uint32_t bound) { return bound ? rng_() % bound : 0; }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace oracle
