// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/patch/match.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <stdexcept>

namespace fixcrew::patch {

std::string_view match_strategy_name(MatchStrategy s) {
    switch (s) {
    case MatchStrategy::Exact: return "Exact";
    case MatchStrategy::WhitespaceNormalized: return "WhitespaceNormalized";
    case MatchStrategy::Fuzzy: return "Fuzzy";
    }
    return "?";
}

MatchResult locate_match(std::string_view content, const std::vector<std::string>& search,
                         const MatchOptions& options) {
    if (search.empty())
        throw std::invalid_argument("locate_match: empty search block");
    if (content.empty())
        throw std::invalid_argument("locate_match: empty content");

    const auto split = text::split_lines(content);
    const auto& lines = split.lines;
    const std::size_t m = search.size();
    const std::size_t n = lines.size();

    if (n >= m) {
        // Pass 1: verbatim.
        long first_hit = -1;
        int hits = 0;
        for (std::size_t i = 0; i + m <= n; ++i) {
            bool eq = true;
            for (std::size_t j = 0; j < m && eq; ++j)
                eq = lines[i + j] == search[j];
            if (eq) {
                if (++hits == 1)
                    first_hit = static_cast<long>(i);
                else if (hits == 2 && first_hit >= 0) {
                    throw Error(ErrorCode::AmbiguousExactMatch,
                                "search block occurs verbatim at line " + std::to_string(first_hit + 1) +
                                    " and again at line " + std::to_string(i + 1));
                }
            }
        }
        if (hits == 1)
            return {first_hit + 1, first_hit + static_cast<long>(m), 1.0, MatchStrategy::Exact};

        // Pass 2: per-line trimmed equality; earliest occurrence wins.
        for (std::size_t i = 0; i + m <= n; ++i) {
            bool eq = true;
            for (std::size_t j = 0; j < m && eq; ++j)
                eq = text::trim(lines[i + j]) == text::trim(search[j]);
            if (eq)
                return {static_cast<long>(i) + 1, static_cast<long>(i + m), 1.0,
                        MatchStrategy::WhitespaceNormalized};
        }

        // Pass 3: sliding window by mean per-line similarity. Comparisons run
        // on per-line similarity sums so ties resolve without rounding noise.
        double best_sum = -1.0;
        std::size_t best_at = 0;
        for (std::size_t i = 0; i + m <= n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                sum += text::line_similarity(search[j], lines[i + j]);
                // Even perfect remaining lines cannot beat the current best.
                if (sum + static_cast<double>(m - j - 1) <= best_sum)
                    break;
            }
            if (sum > best_sum) {
                best_sum = sum;
                best_at = i;
            }
        }
        double best_score = best_sum / static_cast<double>(m);
        if (best_score >= options.fuzzy_threshold)
            return {static_cast<long>(best_at) + 1, static_cast<long>(best_at + m), best_score,
                    MatchStrategy::Fuzzy};
        throw Error(ErrorCode::NoAcceptableMatch,
                    "best window scores " + std::to_string(best_score) + " at lines " +
                        std::to_string(best_at + 1) + "-" + std::to_string(best_at + m) +
                        ", below threshold " + std::to_string(options.fuzzy_threshold));
    }

    throw Error(ErrorCode::NoAcceptableMatch, "search block has " + std::to_string(m) +
                                                  " lines but the file only has " + std::to_string(n));
}

} // namespace fixcrew::patch
