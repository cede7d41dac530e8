// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/orch/roles.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fixcrew::orch {

inline constexpr int kTraceSchemaVersion = 1;

struct TraceEvent {
    int seq = 0;
    std::optional<AgentRole> role; // absent for pipeline-level events
    std::optional<Tool> tool;      // set only for tool uses
    std::string action;
    std::string detail;
    std::string payload_digest; // hash+length of the full payload
    bool ok = true;
};

// Append-only machine-readable record of everything the pipeline did.
class TraceLog {
public:
    void event(std::string action, std::string detail, bool ok = true);
    void role_event(AgentRole role, std::string action, std::string_view payload,
                    std::string detail, bool ok = true);
    void tool_use(AgentRole role, Tool tool, std::string action, std::string_view payload,
                  std::string detail, bool ok = true);

    const std::vector<TraceEvent>& events() const { return events_; }

    std::string to_jsonl() const; // header line + one JSON record per event
    static TraceLog from_jsonl(std::string_view text);
    std::string pretty() const;

private:
    std::vector<TraceEvent> events_;
};

// Replays a trace against a matrix; returns one line per (role, tool) event
// the matrix forbids. Empty means the trace is permission-sound.
std::vector<std::string> verify_trace(const PermissionMatrix& matrix, const TraceLog& trace);

} // namespace fixcrew::orch
