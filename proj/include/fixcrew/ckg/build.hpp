// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/ckg/graph.hpp"
#include "fixcrew/gindex/search.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fixcrew::ckg {

struct BuildOptions {
    std::vector<std::string> languages = {"go", "python"};
    gindex::IndexOptions index;
    bool parallel = true;
};

struct BuildReport {
    long files_indexed = 0;
    std::vector<std::pair<std::string, std::string>> skipped; // path, reason
    long unresolved_calls = 0;
    long unresolved_imports = 0;
    long unresolved_inherits = 0;
    long ambiguous_calls = 0;
};

// Indexes every file a shipped extractor accepts for the requested languages.
// Per-file parse failures skip the file and land in the report; an unreadable
// root or a language set matching no file is fatal.
KnowledgeGraph build_graph(const std::filesystem::path& repo_root, const BuildOptions& options = {},
                           BuildReport* report = nullptr);

} // namespace fixcrew::ckg
