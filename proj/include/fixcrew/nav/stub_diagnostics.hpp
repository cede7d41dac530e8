// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/nav/backend.hpp"

namespace fixcrew::nav {

// Self-contained static checker covering the failure classes the gate cares
// about: unbalanced brackets, missing indented blocks and undefined names.
// Not a type checker; conservative by construction so valid code stays quiet.
class StubDiagnostics final : public DiagnosticsBackend {
public:
    std::vector<Diagnostic> collect(const std::string& path, std::string_view content) override;
};

} // namespace fixcrew::nav
