// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::patch {

enum class MatchStrategy { Exact, WhitespaceNormalized, Fuzzy };

std::string_view match_strategy_name(MatchStrategy s);

struct MatchResult {
    long start_line = 0; // 1-based, inclusive
    long end_line = 0;   // inclusive
    double score = 0.0;  // 1.0 for Exact
    MatchStrategy strategy = MatchStrategy::Exact;
};

struct MatchOptions {
    // Minimum mean per-line similarity for a fuzzy window to be accepted.
    double fuzzy_threshold = 0.8;
};

// Finds the segment of `content` the search lines refer to. Strategies are
// tried in order: verbatim line equality, equality after trimming each line,
// then a sliding window scored by mean per-line edit similarity (earliest
// best window wins ties).
//
// Throws Error{AmbiguousExactMatch} when the search text occurs verbatim more
// than once, and Error{NoAcceptableMatch} when no window reaches the
// threshold (the message carries the best score and where it was).
MatchResult locate_match(std::string_view content, const std::vector<std::string>& search,
                         const MatchOptions& options = {});

} // namespace fixcrew::patch
