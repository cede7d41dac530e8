// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::nav::lsp {

// Byte pipe to a language server.
class Transport {
public:
    virtual ~Transport() = default;
    virtual void write(std::string_view bytes) = 0;
    // Returns up to `max` bytes (at least one), 0 on EOF. Throws
    // Error{Timeout} when nothing arrives within the bound.
    virtual std::size_t read(char* buf, std::size_t max, int timeout_ms) = 0;
};

// In-process transport over iostreams; used by tests to drive the codec.
class StreamTransport final : public Transport {
public:
    StreamTransport(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
    void write(std::string_view bytes) override;
    std::size_t read(char* buf, std::size_t max, int timeout_ms) override;

private:
    std::istream& in_;
    std::ostream& out_;
};

// Spawns the server process and talks over its stdin/stdout.
class ProcessTransport final : public Transport {
public:
    explicit ProcessTransport(const std::vector<std::string>& argv);
    ~ProcessTransport() override;

    ProcessTransport(const ProcessTransport&) = delete;
    ProcessTransport& operator=(const ProcessTransport&) = delete;

    void write(std::string_view bytes) override;
    std::size_t read(char* buf, std::size_t max, int timeout_ms) override;

private:
    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
};

} // namespace fixcrew::nav::lsp
