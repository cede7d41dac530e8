// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/gate/gate.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/hash.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>

namespace fixcrew::gate {

namespace {

long blocking_count(const std::vector<nav::Diagnostic>& diags) {
    return static_cast<long>(std::count_if(diags.begin(), diags.end(), [](const auto& d) {
        return d.severity >= nav::Severity::Error;
    }));
}

std::string match_key(const nav::Diagnostic& d) {
    return d.path + "\x1f" + std::string(nav::severity_name(d.severity)) + "\x1f" + d.code +
           "\x1f" + text::normalize_whitespace(d.message);
}

} // namespace

std::vector<nav::Diagnostic> DiagnosticsGate::baseline_for(const std::string& path,
                                                           std::string_view content) {
    auto key = std::make_pair(path, digest(content));
    auto it = baseline_cache_.find(key);
    if (it != baseline_cache_.end())
        return it->second;
    auto diags = backend_.collect(path, content);
    baseline_cache_.emplace(std::move(key), diags);
    return diags;
}

GateVerdict DiagnosticsGate::evaluate_contents(const std::string& path, std::string_view original,
                                               std::string_view patched) {
    GateVerdict verdict;
    std::vector<nav::Diagnostic> before, after;
    try {
        before = baseline_for(path, original);
        after = backend_.collect(path, patched);
    } catch (const Error& e) {
        verdict.accepted = false;
        verdict.reason = e.what();
        return verdict;
    }

    verdict.baseline_count = blocking_count(before);
    verdict.patched_count = blocking_count(after);

    std::map<std::string, long> pool;
    for (const auto& d : before)
        ++pool[match_key(d)];
    for (const auto& d : after) {
        auto it = pool.find(match_key(d));
        if (it != pool.end() && it->second > 0)
            --it->second; // has a baseline counterpart
        else
            verdict.new_diagnostics.push_back(d);
    }
    verdict.accepted = std::none_of(
        verdict.new_diagnostics.begin(), verdict.new_diagnostics.end(),
        [](const auto& d) { return d.severity >= nav::Severity::Error; });
    return verdict;
}

GateVerdict DiagnosticsGate::evaluate_patch(std::string_view original,
                                            const patch::UnifiedDiff& diff) {
    std::string patched = patch::apply_unified_diff(original, diff); // throws DiffApplyFailure
    const std::string& path = diff.new_path != "/dev/null" ? diff.new_path : diff.old_path;
    return evaluate_contents(path, original, patched);
}

} // namespace fixcrew::gate
