// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/ckg/graph.hpp"
#include "fixcrew/nav/snapshot.hpp"
#include "fixcrew/orch/roles.hpp"
#include "fixcrew/orch/trace.hpp"

#include <string>
#include <vector>

namespace fixcrew::orch {

struct ContextItem {
    std::string path;
    long start_line = 1;
    long end_line = 1;
    std::string snippet;
    std::string provenance; // which tool surfaced it
    double score = 0.0;
};

struct ContextBundle {
    std::vector<ContextItem> items;
    std::vector<std::string> files;

    bool empty() const { return items.empty() && files.empty(); }
    // Prompt-ready rendering, bounded in size.
    std::string render(std::size_t max_bytes = 24 * 1024) const;
};

struct ContextBudget {
    int max_items = 12;
    long snippet_radius = 5;  // lines around a traceback hit
    long max_snippet_lines = 60;
};

// Searcher step: graph lookups for entities the issue mentions plus
// file:line references parsed out of embedded tracebacks. Every access is
// permission-checked and traced. Throws Error{EmptyContext} when nothing at
// all is retrievable.
ContextBundle search_context(const std::string& issue_title, const std::string& issue_body,
                             const ckg::KnowledgeGraph& graph, const nav::FileSnapshot& snapshot,
                             const PermissionMatrix& matrix, TraceLog& trace,
                             const ContextBudget& budget = {});

} // namespace fixcrew::orch
