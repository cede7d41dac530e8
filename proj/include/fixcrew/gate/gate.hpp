// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/nav/backend.hpp"
#include "fixcrew/patch/diff.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::gate {

struct GateVerdict {
    bool accepted = false;
    std::vector<nav::Diagnostic> new_diagnostics; // every severity; only Fatal/Error block
    long baseline_count = 0;                      // Fatal+Error findings before the patch
    long patched_count = 0;                       // and after
    std::string reason; // non-diagnostic rejection cause (backend down, ...)
};

// Accepts a patch iff it introduces no new Fatal/Error findings relative to
// the pre-patch content. Findings are matched across versions on
// (path, severity, code, whitespace-normalized message) — line numbers shift
// under edits and are ignored on purpose. Pre-existing errors never block.
class DiagnosticsGate {
public:
    explicit DiagnosticsGate(nav::DiagnosticsBackend& backend) : backend_(backend) {}

    // Applies `diff` to `original` in memory and compares diagnostics.
    // Throws Error{DiffApplyFailure} when the diff does not apply; a failing
    // diagnostics backend yields a rejected verdict, never silent acceptance.
    GateVerdict evaluate_patch(std::string_view original, const patch::UnifiedDiff& diff);

    // Same comparison for already-materialized contents.
    GateVerdict evaluate_contents(const std::string& path, std::string_view original,
                                  std::string_view patched);

private:
    std::vector<nav::Diagnostic> baseline_for(const std::string& path, std::string_view content);

    nav::DiagnosticsBackend& backend_;
    // Baseline results keyed by content hash; candidates against one original
    // reuse the first run.
    std::map<std::pair<std::string, std::string>, std::vector<nav::Diagnostic>> baseline_cache_;
};

} // namespace fixcrew::gate
