// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/nav/resolve.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <set>

namespace fixcrew::nav {

namespace {

std::vector<text::IdentifierHit> hits_on(const std::vector<std::string>& lines, long line) {
    if (line < 1 || line > static_cast<long>(lines.size()))
        return {};
    return text::identifiers_on_line(lines[static_cast<std::size_t>(line - 1)]);
}

// First occurrence of `identifier` as a whole token on `line`, or 0.
long column_of(const std::vector<std::string>& lines, long line, const std::string& identifier) {
    for (const auto& hit : hits_on(lines, line))
        if (hit.token == identifier)
            return static_cast<long>(hit.column);
    return 0;
}

// One identifier hit from the lines at distance `d`, smaller line first.
// Returns nullopt when the distance yields nothing; throws on ambiguity when
// no identifier was supplied.
std::optional<ResolvedPosition> probe_distance(const std::vector<std::string>& lines,
                                               const std::string& path, long center, long d,
                                               const std::string& identifier) {
    std::vector<long> candidates;
    if (d == 0) {
        candidates.push_back(center);
    } else {
        candidates.push_back(center - d);
        candidates.push_back(center + d);
    }

    if (!identifier.empty()) {
        for (long line : candidates) {
            long col = column_of(lines, line, identifier);
            if (col > 0)
                return ResolvedPosition{path, line, col, identifier, ResolveTier::ExactLine};
        }
        return std::nullopt;
    }

    // No identifier given: the hit must be unique across the distance.
    std::set<std::string> distinct;
    std::optional<ResolvedPosition> first;
    for (long line : candidates) {
        for (const auto& hit : hits_on(lines, line)) {
            distinct.insert(hit.token);
            if (!first)
                first = ResolvedPosition{path, line, static_cast<long>(hit.column), hit.token,
                                         ResolveTier::ExactLine};
        }
    }
    if (distinct.empty())
        return std::nullopt;
    if (distinct.size() > 1)
        throw Error(ErrorCode::AmbiguousIdentifier,
                    std::to_string(distinct.size()) + " distinct identifiers near " + path + ":" +
                        std::to_string(center) + " and none was named");
    return first;
}

} // namespace

ResolvedPosition resolve_position(const PositionHint& hint, const FileSnapshot& snapshot,
                                  const ResolveOptions& options, ResolveTrace* trace) {
    auto note = [&trace](ResolveTier tier) {
        if (trace)
            trace->attempted.push_back(tier);
    };

    const std::string* content = snapshot.get(hint.path);
    std::vector<std::string> lines;
    if (content)
        lines = text::split_lines(*content).lines;

    // Tier 1: the stated line.
    note(ResolveTier::ExactLine);
    if (content) {
        auto hit = probe_distance(lines, hint.path, hint.line, 0, hint.identifier);
        if (hit) {
            hit->tier = ResolveTier::ExactLine;
            return *hit;
        }
    }

    // Tier 2: lines within the radius, nearest first.
    note(ResolveTier::NearbyLine);
    if (content) {
        for (long d = 1; d <= options.nearby_radius; ++d) {
            auto hit = probe_distance(lines, hint.path, hint.line, d, hint.identifier);
            if (hit) {
                hit->tier = ResolveTier::NearbyLine;
                return *hit;
            }
        }
    }

    // Tier 3: opened files in browse order; needs a named identifier.
    note(ResolveTier::OpenedFiles);
    if (!hint.identifier.empty()) {
        for (const auto& opened : hint.opened_files) {
            const std::string* oc = snapshot.get(opened);
            if (!oc)
                continue;
            auto olines = text::split_lines(*oc).lines;
            long best_line = 0, best_col = 0;
            for (long l = 1; l <= static_cast<long>(olines.size()); ++l) {
                long col = column_of(olines, l, hint.identifier);
                if (col == 0)
                    continue;
                if (best_line == 0 ||
                    std::abs(l - hint.line) < std::abs(best_line - hint.line) ||
                    (std::abs(l - hint.line) == std::abs(best_line - hint.line) && l < best_line)) {
                    best_line = l;
                    best_col = col;
                }
            }
            if (best_line > 0)
                return ResolvedPosition{opened, best_line, best_col, hint.identifier,
                                        ResolveTier::OpenedFiles};
        }
    }

    throw Error(ErrorCode::NoIdentifierFound,
                "no identifier " +
                    (hint.identifier.empty() ? std::string("visible")
                                             : "'" + hint.identifier + "' found") +
                    " near " + hint.path + ":" + std::to_string(hint.line) +
                    " or in opened files");
}

} // namespace fixcrew::nav
