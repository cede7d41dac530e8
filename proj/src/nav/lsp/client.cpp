// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/nav/lsp/client.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>

namespace fixcrew::nav::lsp {

using nlohmann::json;

namespace {

std::string language_id_for(const std::string& path) {
    if (text::ends_with(path, ".py"))
        return "python";
    if (text::ends_with(path, ".go"))
        return "go";
    return "plaintext";
}

Severity severity_from_wire(int value) {
    switch (value) {
    case 1: return Severity::Error;
    case 2: return Severity::Warning;
    case 3: return Severity::Info;
    case 4: return Severity::Hint;
    }
    return Severity::Error;
}

} // namespace

LspClient::LspClient(std::unique_ptr<Transport> transport, std::string root_path, int timeout_ms)
    : transport_(std::move(transport)), reader_(*transport_), root_path_(std::move(root_path)),
      timeout_ms_(timeout_ms) {
    while (!root_path_.empty() && root_path_.back() == '/')
        root_path_.pop_back();
}

LspClient::~LspClient() = default;

std::string LspClient::uri_for(const std::string& rel_path) const {
    return "file://" + root_path_ + "/" + rel_path;
}

std::string LspClient::rel_for(const std::string& uri) const {
    std::string prefix = "file://" + root_path_ + "/";
    if (text::starts_with(uri, prefix))
        return uri.substr(prefix.size());
    if (text::starts_with(uri, "file://"))
        return uri.substr(7);
    return uri;
}

void LspClient::handle_async(const json& message) {
    if (message.value("method", "") == "textDocument/publishDiagnostics") {
        const auto& params = message.at("params");
        published_[params.value("uri", "")] = params;
        return;
    }
    // server-to-client request: answer with an empty result to keep going
    if (message.contains("id") && message.contains("method")) {
        json reply = {{"jsonrpc", "2.0"}, {"id", message["id"]}, {"result", nullptr}};
        transport_->write(encode_frame(reply));
    }
}

json LspClient::request(const std::string& method, json params) {
    std::int64_t id = next_id_++;
    json msg = {{"jsonrpc", "2.0"}, {"id", id}, {"method", method}, {"params", std::move(params)}};
    transport_->write(encode_frame(msg));
    for (;;) {
        json incoming = reader_.read_message(timeout_ms_);
        if (incoming.contains("id") && !incoming.contains("method")) {
            if (incoming["id"] == id) {
                if (incoming.contains("error"))
                    throw Error(ErrorCode::BackendUnavailable,
                                method + " failed: " + incoming["error"].dump());
                return incoming.value("result", json());
            }
            continue; // stale response
        }
        handle_async(incoming);
    }
}

void LspClient::notify(const std::string& method, json params) {
    json msg = {{"jsonrpc", "2.0"}, {"method", method}, {"params", std::move(params)}};
    transport_->write(encode_frame(msg));
}

void LspClient::initialize() {
    if (initialized_)
        return;
    json params = {{"processId", nullptr},
                   {"rootUri", "file://" + root_path_},
                   {"capabilities", json::object()}};
    request("initialize", std::move(params));
    notify("initialized", json::object());
    initialized_ = true;
}

std::vector<Location> LspClient::navigate(NavKind kind, const ResolvedPosition& pos) {
    initialize();
    json params = {{"textDocument", {{"uri", uri_for(pos.path)}}},
                   {"position", {{"line", pos.line - 1}, {"character", pos.column - 1}}}};
    std::string method =
        kind == NavKind::Definition ? "textDocument/definition" : "textDocument/references";
    if (kind == NavKind::References)
        params["context"] = {{"includeDeclaration", true}};

    json result = request(method, std::move(params));
    std::vector<Location> out;
    auto add = [&out, this](const json& loc) {
        if (loc.contains("uri") && loc.contains("range")) {
            const auto& start = loc["range"]["start"];
            out.push_back({rel_for(loc["uri"].get<std::string>()),
                           start.value("line", 0L) + 1, start.value("character", 0L) + 1});
        } else if (loc.contains("targetUri")) { // LocationLink
            const auto& start = loc["targetSelectionRange"]["start"];
            out.push_back({rel_for(loc["targetUri"].get<std::string>()),
                           start.value("line", 0L) + 1, start.value("character", 0L) + 1});
        }
    };
    if (result.is_array())
        for (const auto& loc : result)
            add(loc);
    else if (result.is_object())
        add(result);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Diagnostic> LspClient::collect(const std::string& path, std::string_view content) {
    initialize();
    std::string uri = uri_for(path);
    published_.erase(uri);
    notify("textDocument/didOpen", {{"textDocument",
                                     {{"uri", uri},
                                      {"languageId", language_id_for(path)},
                                      {"version", 1},
                                      {"text", std::string(content)}}}});
    while (!published_.count(uri))
        handle_async(reader_.read_message(timeout_ms_));
    notify("textDocument/didClose", {{"textDocument", {{"uri", uri}}}});

    std::vector<Diagnostic> out;
    for (const auto& d : published_[uri].value("diagnostics", json::array())) {
        Diagnostic diag;
        diag.path = path;
        diag.line = d["range"]["start"].value("line", 0L) + 1;
        diag.severity = severity_from_wire(d.value("severity", 1));
        if (d.contains("code")) {
            diag.code = d["code"].is_string() ? d["code"].get<std::string>()
                                              : std::to_string(d["code"].get<long>());
        }
        diag.message = d.value("message", "");
        out.push_back(std::move(diag));
    }
    std::sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.line != b.line)
            return a.line < b.line;
        return a.message < b.message;
    });
    return out;
}

void LspClient::shutdown() {
    if (!initialized_)
        return;
    try {
        request("shutdown", json());
        notify("exit", json());
    } catch (const Error&) {
        // server already gone
    }
    initialized_ = false;
}

} // namespace fixcrew::nav::lsp
