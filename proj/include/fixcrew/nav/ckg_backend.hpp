// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/ckg/graph.hpp"
#include "fixcrew/nav/backend.hpp"
#include "fixcrew/nav/snapshot.hpp"

namespace fixcrew::nav {

// In-process navigation backend answering from the knowledge graph; used
// when no external language server is configured (and in hermetic tests).
class CkgBackend final : public NavigationBackend {
public:
    CkgBackend(const ckg::KnowledgeGraph& graph, const FileSnapshot& snapshot)
        : graph_(graph), snapshot_(snapshot) {}

    std::vector<Location> navigate(NavKind kind, const ResolvedPosition& pos) override;

private:
    const ckg::KnowledgeGraph& graph_;
    const FileSnapshot& snapshot_;
};

} // namespace fixcrew::nav
