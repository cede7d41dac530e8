// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/orch/provider.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <httplib.h>
#include <json.hpp>

#include <fstream>
#include <thread>

namespace fixcrew::orch {

using nlohmann::json;

namespace {

std::string trim_blank_edges(const std::vector<std::string>& lines, std::size_t begin,
                             std::size_t end) {
    while (begin < end && text::trim(lines[begin]).empty())
        ++begin;
    while (end > begin && text::trim(lines[end - 1]).empty())
        --end;
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        out += lines[i];
        out += '\n';
    }
    return out;
}

} // namespace

ScriptedProvider ScriptedProvider::from_text(std::string_view input) {
    ScriptedProvider provider;
    auto split = text::split_lines(input);
    const auto& lines = split.lines;

    std::optional<std::size_t> section_start;
    std::string role_filter;
    auto flush = [&](std::size_t end) {
        if (!section_start)
            return;
        provider.entries_.push_back({role_filter, trim_blank_edges(lines, *section_start, end)});
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = text::trim(lines[i]);
        if (text::starts_with(line, "@@RESPONSE")) {
            flush(i);
            section_start = i + 1;
            role_filter.clear();
            std::size_t at = line.find("role=");
            if (at != std::string_view::npos)
                role_filter = std::string(text::trim(line.substr(at + 5)));
        }
    }
    flush(lines.size());
    return provider;
}

ScriptedProvider ScriptedProvider::from_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::UnreadablePath, file.string());
    return from_text(std::string(std::istreambuf_iterator<char>(in),
                                 std::istreambuf_iterator<char>()));
}

std::string ScriptedProvider::complete(const CompletionRequest& request) {
    if (entries_.empty())
        throw Error(ErrorCode::ProviderFailure,
                    "replay script exhausted; no response left for " +
                        std::string(role_name(request.role)));
    Entry entry = std::move(entries_.front());
    entries_.pop_front();
    if (!entry.role_filter.empty() && entry.role_filter != role_name(request.role))
        throw Error(ErrorCode::ProviderFailure,
                    "replay script expected a " + entry.role_filter + " request, got " +
                        std::string(role_name(request.role)));
    return entry.text;
}

HttpProvider::HttpProvider(Config config) : config_(std::move(config)) {
    std::string_view url = config_.endpoint;
    if (!text::starts_with(url, "http://"))
        throw Error(ErrorCode::ConfigError, "provider endpoint must be http://host[:port]/path");
    url.remove_prefix(7);
    std::size_t slash = url.find('/');
    std::string_view authority = slash == std::string_view::npos ? url : url.substr(0, slash);
    path_ = slash == std::string_view::npos ? "/" : std::string(url.substr(slash));
    std::size_t colon = authority.find(':');
    if (colon == std::string_view::npos) {
        host_ = std::string(authority);
        port_ = 80;
    } else {
        host_ = std::string(authority.substr(0, colon));
        port_ = std::stoi(std::string(authority.substr(colon + 1)));
    }
    if (host_.empty())
        throw Error(ErrorCode::ConfigError, "provider endpoint has no host");
}

std::string HttpProvider::complete(const CompletionRequest& request) {
    json payload = {{"role", std::string(role_name(request.role))},
                    {"system", request.system},
                    {"context", request.context},
                    {"history", json::array()}};
    for (const auto& turn : request.history)
        payload["history"].push_back({{"speaker", turn.speaker}, {"content", turn.content}});
    std::string body = payload.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
        if (attempt > 0)
            std::this_thread::sleep_for(std::chrono::milliseconds(100 * attempt));
        httplib::Client client(host_, port_);
        client.set_connection_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
        client.set_read_timeout(config_.timeout_ms / 1000, (config_.timeout_ms % 1000) * 1000);
        httplib::Headers headers;
        for (const auto& [k, v] : config_.headers)
            headers.emplace(k, v);

        auto res = client.Post(path_, headers, body, "application/json");
        if (!res) {
            last_error = "connection failed";
            continue;
        }
        if (res->status >= 500) {
            last_error = "server returned " + std::to_string(res->status);
            continue;
        }
        if (res->status != 200)
            throw Error(ErrorCode::ProviderFailure,
                        "provider returned " + std::to_string(res->status) + ": " + res->body);
        try {
            json reply = json::parse(res->body);
            return reply.at("content").get<std::string>();
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ProviderFailure,
                        std::string("provider reply is not {\"content\": ...}: ") + e.what());
        }
    }
    throw Error(ErrorCode::ProviderFailure,
                "provider unreachable after " + std::to_string(config_.max_retries + 1) +
                    " attempts: " + last_error);
}

} // namespace fixcrew::orch
