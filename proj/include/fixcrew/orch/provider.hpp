// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/orch/roles.hpp"

#include <deque>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fixcrew::orch {

struct ProviderTurn {
    std::string speaker; // "user" or "assistant"
    std::string content;
};

struct CompletionRequest {
    AgentRole role = AgentRole::Searcher;
    std::string system;
    std::string context;
    std::vector<ProviderTurn> history;
};

class CompletionProvider {
public:
    virtual ~CompletionProvider() = default;
    // Throws Error{ProviderFailure} when no completion can be produced.
    virtual std::string complete(const CompletionRequest& request) = 0;
};

// Replays canned responses from a plain-text fixture. Responses are
// separated by lines starting with "@@RESPONSE"; an optional "role=Name"
// on the marker asserts which role must be asking. Leading/trailing blank
// lines of each response are trimmed, interior text is verbatim.
class ScriptedProvider final : public CompletionProvider {
public:
    static ScriptedProvider from_file(const std::filesystem::path& file);
    static ScriptedProvider from_text(std::string_view text);

    std::string complete(const CompletionRequest& request) override;
    std::size_t remaining() const { return entries_.size(); }

private:
    struct Entry {
        std::string role_filter; // empty = any role
        std::string text;
    };
    std::deque<Entry> entries_;
};

// POSTs {"role","system","context","history"} as JSON and expects
// {"content": "..."} back. Retries transient failures (connect errors and
// 5xx) with a short backoff before giving up.
class HttpProvider final : public CompletionProvider {
public:
    struct Config {
        std::string endpoint; // http://host:port/path
        int timeout_ms = 60000;
        int max_retries = 2;
        std::map<std::string, std::string> headers;
    };

    explicit HttpProvider(Config config);
    std::string complete(const CompletionRequest& request) override;

private:
    Config config_;
    std::string host_;
    int port_ = 80;
    std::string path_;
};

} // namespace fixcrew::orch
