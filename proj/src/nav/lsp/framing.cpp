// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/nav/lsp/framing.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

namespace fixcrew::nav::lsp {

using nlohmann::json;

std::string encode_frame(const json& message) {
    std::string body = message.dump();
    return "Content-Length: " + std::to_string(body.size()) + "\r\n\r\n" + body;
}

json FrameReader::read_message(int timeout_ms) {
    char chunk[4096];

    auto fill = [&]() {
        std::size_t n = transport_.read(chunk, sizeof chunk, timeout_ms);
        if (n == 0)
            throw Error(ErrorCode::BackendUnavailable, "connection closed mid-stream");
        buffer_.append(chunk, n);
    };

    std::size_t header_end;
    while ((header_end = buffer_.find("\r\n\r\n")) == std::string::npos)
        fill();

    std::size_t content_length = std::string::npos;
    std::size_t pos = 0;
    while (pos < header_end) {
        std::size_t eol = buffer_.find("\r\n", pos);
        if (eol == std::string::npos || eol > header_end)
            eol = header_end;
        std::string_view line(buffer_.data() + pos, eol - pos);
        std::size_t colon = line.find(':');
        if (colon != std::string_view::npos) {
            std::string key = text::to_lower(text::trim(line.substr(0, colon)));
            if (key == "content-length") {
                std::string_view value = text::trim(line.substr(colon + 1));
                content_length = 0;
                for (char c : value) {
                    if (c < '0' || c > '9')
                        throw Error(ErrorCode::BackendUnavailable,
                                    "bad Content-Length: " + std::string(value));
                    content_length = content_length * 10 + static_cast<std::size_t>(c - '0');
                }
            }
        }
        pos = eol + 2;
    }
    if (content_length == std::string::npos)
        throw Error(ErrorCode::BackendUnavailable, "frame without Content-Length header");

    std::size_t body_begin = header_end + 4;
    while (buffer_.size() < body_begin + content_length)
        fill();

    std::string body = buffer_.substr(body_begin, content_length);
    buffer_.erase(0, body_begin + content_length);
    try {
        return json::parse(body);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::BackendUnavailable, std::string("bad message body: ") + e.what());
    }
}

} // namespace fixcrew::nav::lsp
