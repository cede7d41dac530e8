// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/nav/types.hpp"

#include <string_view>
#include <vector>

namespace fixcrew::nav {

enum class NavKind { Definition, References };

class NavigationBackend {
public:
    virtual ~NavigationBackend() = default;
    // Definition: declaration sites (possibly none). References: all known
    // usage sites. Results sorted by (path, line, column).
    virtual std::vector<Location> navigate(NavKind kind, const ResolvedPosition& pos) = 0;
};

class DiagnosticsBackend {
public:
    virtual ~DiagnosticsBackend() = default;
    // Diagnoses the supplied content (which need not be saved anywhere).
    // Deterministic for a fixed (path, content) pair within one session.
    virtual std::vector<Diagnostic> collect(const std::string& path, std::string_view content) = 0;
};

} // namespace fixcrew::nav
