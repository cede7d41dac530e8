// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/ckg/graph.hpp"

#include <filesystem>

namespace fixcrew::ckg {

// Line-delimited graph file, one JSON record per line:
//   {"format":"fixcrew-ckg","version":1,"snapshot_id":"<hex>"}   header
//   {"t":"entity","id":N,"kind":"...","name":"...", ...}
//   {"t":"relation","src":N,"dst":M,"kind":"...","path":"...","line":L}
inline constexpr int kGraphFormatVersion = 1;
inline constexpr const char* kGraphFormatName = "fixcrew-ckg";

void save_graph(const KnowledgeGraph& graph, const std::filesystem::path& file);
KnowledgeGraph load_graph(const std::filesystem::path& file);

} // namespace fixcrew::ckg
