// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/orch/trace.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/hash.hpp"
#include "fixcrew/text.hpp"

#include <json.hpp>

namespace fixcrew::orch {

using nlohmann::json;

namespace {

std::string make_digest(std::string_view payload) {
    if (payload.empty())
        return "";
    return digest(payload) + ":" + std::to_string(payload.size());
}

} // namespace

void TraceLog::event(std::string action, std::string detail, bool ok) {
    TraceEvent e;
    e.seq = static_cast<int>(events_.size()) + 1;
    e.action = std::move(action);
    e.detail = std::move(detail);
    e.ok = ok;
    events_.push_back(std::move(e));
}

void TraceLog::role_event(AgentRole role, std::string action, std::string_view payload,
                          std::string detail, bool ok) {
    TraceEvent e;
    e.seq = static_cast<int>(events_.size()) + 1;
    e.role = role;
    e.action = std::move(action);
    e.detail = std::move(detail);
    e.payload_digest = make_digest(payload);
    e.ok = ok;
    events_.push_back(std::move(e));
}

void TraceLog::tool_use(AgentRole role, Tool tool, std::string action, std::string_view payload,
                        std::string detail, bool ok) {
    TraceEvent e;
    e.seq = static_cast<int>(events_.size()) + 1;
    e.role = role;
    e.tool = tool;
    e.action = std::move(action);
    e.detail = std::move(detail);
    e.payload_digest = make_digest(payload);
    e.ok = ok;
    events_.push_back(std::move(e));
}

std::string TraceLog::to_jsonl() const {
    std::string out;
    json header = {{"schema", "fixcrew-trace"}, {"version", kTraceSchemaVersion}};
    out += header.dump() + "\n";
    for (const auto& e : events_) {
        json rec = {{"seq", e.seq}, {"action", e.action}, {"ok", e.ok}};
        if (e.role)
            rec["role"] = std::string(role_name(*e.role));
        if (e.tool)
            rec["tool"] = std::string(tool_name(*e.tool));
        if (!e.detail.empty())
            rec["detail"] = e.detail;
        if (!e.payload_digest.empty())
            rec["digest"] = e.payload_digest;
        out += rec.dump() + "\n";
    }
    return out;
}

TraceLog TraceLog::from_jsonl(std::string_view input) {
    TraceLog log;
    auto split = text::split_lines(input);
    if (split.lines.empty())
        throw Error(ErrorCode::ParseFailure, "empty trace");
    try {
        json header = json::parse(split.lines[0]);
        if (header.value("schema", "") != "fixcrew-trace")
            throw Error(ErrorCode::ParseFailure, "not a trace file");
        if (header.value("version", 0) != kTraceSchemaVersion)
            throw Error(ErrorCode::ParseFailure, "unsupported trace version");
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseFailure, std::string("bad trace header: ") + e.what());
    }
    for (std::size_t i = 1; i < split.lines.size(); ++i) {
        if (text::trim(split.lines[i]).empty())
            continue;
        json rec;
        try {
            rec = json::parse(split.lines[i]);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseFailure,
                        "trace line " + std::to_string(i + 1) + ": " + e.what());
        }
        TraceEvent e;
        e.seq = rec.value("seq", 0);
        e.action = rec.value("action", "");
        e.detail = rec.value("detail", "");
        e.payload_digest = rec.value("digest", "");
        e.ok = rec.value("ok", true);
        if (rec.contains("role"))
            e.role = role_from(rec["role"].get<std::string>());
        if (rec.contains("tool"))
            e.tool = tool_from(rec["tool"].get<std::string>());
        log.events_.push_back(std::move(e));
    }
    return log;
}

std::string TraceLog::pretty() const {
    std::string out;
    for (const auto& e : events_) {
        out += "#" + std::to_string(e.seq);
        out += e.ok ? "  ok   " : "  FAIL ";
        if (e.role)
            out += std::string(role_name(*e.role));
        else
            out += "-";
        if (e.tool) {
            out += " [";
            out += std::string(tool_name(*e.tool));
            out += "]";
        }
        out += " " + e.action;
        if (!e.detail.empty())
            out += ": " + e.detail;
        if (!e.payload_digest.empty())
            out += " (" + e.payload_digest + ")";
        out += "\n";
    }
    return out;
}

std::vector<std::string> verify_trace(const PermissionMatrix& matrix, const TraceLog& trace) {
    std::vector<std::string> violations;
    for (const auto& e : trace.events()) {
        if (!e.role || !e.tool)
            continue;
        if (!matrix.allows(*e.role, *e.tool))
            violations.push_back("event #" + std::to_string(e.seq) + ": " +
                                 std::string(role_name(*e.role)) + " used " +
                                 std::string(tool_name(*e.tool)));
    }
    return violations;
}

} // namespace fixcrew::orch
