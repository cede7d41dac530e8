// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/nav/backend.hpp"
#include "fixcrew/nav/lsp/framing.hpp"
#include "fixcrew/nav/lsp/transport.hpp"

#include <map>
#include <memory>

namespace fixcrew::nav::lsp {

// Language-server client speaking JSON-RPC over a Transport. This module's
// positions are 1-based; the wire uses the protocol's 0-based lines and
// characters, converted exactly at this boundary. Requests within a session
// are serialized.
class LspClient final : public NavigationBackend, public DiagnosticsBackend {
public:
    LspClient(std::unique_ptr<Transport> transport, std::string root_path, int timeout_ms = 5000);
    ~LspClient() override;

    void initialize();
    void shutdown();

    std::vector<Location> navigate(NavKind kind, const ResolvedPosition& pos) override;
    std::vector<Diagnostic> collect(const std::string& path, std::string_view content) override;

private:
    nlohmann::json request(const std::string& method, nlohmann::json params);
    void notify(const std::string& method, nlohmann::json params);
    void handle_async(const nlohmann::json& message);
    std::string uri_for(const std::string& rel_path) const;
    std::string rel_for(const std::string& uri) const;

    std::unique_ptr<Transport> transport_;
    FrameReader reader_;
    std::string root_path_; // absolute, no trailing slash
    int timeout_ms_;
    std::int64_t next_id_ = 1;
    bool initialized_ = false;
    std::map<std::string, nlohmann::json> published_; // uri -> diagnostics params
};

} // namespace fixcrew::nav::lsp
