// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/nav/lsp/transport.hpp"

#include <json.hpp>

#include <string>

namespace fixcrew::nav::lsp {

// "Content-Length: N\r\n\r\n" + UTF-8 body, exactly.
std::string encode_frame(const nlohmann::json& message);

// Incremental frame decoder. Header keys are matched case-insensitively;
// unknown headers are ignored.
class FrameReader {
public:
    explicit FrameReader(Transport& transport) : transport_(transport) {}

    // Next complete message. Throws Error{BackendUnavailable} on EOF or a
    // malformed frame, Error{Timeout} when the transport stalls.
    nlohmann::json read_message(int timeout_ms);

private:
    Transport& transport_;
    std::string buffer_;
};

} // namespace fixcrew::nav::lsp
