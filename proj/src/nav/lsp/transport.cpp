// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/nav/lsp/transport.hpp"

#include "fixcrew/error.hpp"

#include <csignal>
#include <istream>
#include <ostream>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace fixcrew::nav::lsp {

void StreamTransport::write(std::string_view bytes) {
    out_.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out_.flush();
}

std::size_t StreamTransport::read(char* buf, std::size_t max, int /*timeout_ms*/) {
    in_.read(buf, static_cast<std::streamsize>(max));
    std::streamsize got = in_.gcount();
    if (got <= 0)
        return 0;
    return static_cast<std::size_t>(got);
}

ProcessTransport::ProcessTransport(const std::vector<std::string>& argv) {
    if (argv.empty())
        throw Error(ErrorCode::SpawnFailure, "empty server command");

    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
        throw Error(ErrorCode::SpawnFailure, "pipe failed");

    pid_ = fork();
    if (pid_ < 0)
        throw Error(ErrorCode::SpawnFailure, "fork failed");
    if (pid_ == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        std::vector<char*> args;
        for (const auto& a : argv)
            args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        execvp(args[0], args.data());
        _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    to_child_ = to_child[1];
    from_child_ = from_child[0];
}

ProcessTransport::~ProcessTransport() {
    if (to_child_ >= 0)
        close(to_child_);
    if (from_child_ >= 0)
        close(from_child_);
    if (pid_ > 0) {
        int status = 0;
        if (waitpid(pid_, &status, WNOHANG) == 0) {
            kill(pid_, SIGKILL);
            waitpid(pid_, &status, 0);
        }
    }
}

void ProcessTransport::write(std::string_view bytes) {
    std::size_t off = 0;
    while (off < bytes.size()) {
        ssize_t n = ::write(to_child_, bytes.data() + off, bytes.size() - off);
        if (n < 0)
            throw Error(ErrorCode::BackendUnavailable, "server pipe closed while writing");
        off += static_cast<std::size_t>(n);
    }
}

std::size_t ProcessTransport::read(char* buf, std::size_t max, int timeout_ms) {
    pollfd pfd{from_child_, POLLIN, 0};
    int rc = poll(&pfd, 1, timeout_ms);
    if (rc == 0)
        throw Error(ErrorCode::Timeout, "language server did not answer in time");
    if (rc < 0)
        throw Error(ErrorCode::BackendUnavailable, "poll failed");
    ssize_t n = ::read(from_child_, buf, max);
    if (n < 0)
        throw Error(ErrorCode::BackendUnavailable, "server pipe read failed");
    return static_cast<std::size_t>(n);
}

} // namespace fixcrew::nav::lsp
