// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fixcrew::sandbox {

struct ExecLimits {
    double timeout_seconds = 120.0;
    std::size_t output_cap = 1 << 20; // per stream
};

struct ExecutionResult {
    int exit_code = 0; // 128+signal when killed; 137 on timeout
    std::string stdout_text;
    std::string stderr_text;
    double duration_seconds = 0.0;
    bool timed_out = false;
    bool stdout_truncated = false;
    bool stderr_truncated = false;

    bool ok() const { return exit_code == 0 && !timed_out; }
};

// Minimal, fixed environment for sandboxed children; `overrides` wins.
std::map<std::string, std::string> sandbox_env(const std::filesystem::path& cwd,
                                               const std::map<std::string, std::string>& overrides = {});

// Runs argv with `cwd` as working directory, capturing both streams up to
// the cap. The child gets its own process group; on timeout the whole group
// is killed. Throws Error{SpawnFailure} when the program cannot start.
ExecutionResult run_process(const std::vector<std::string>& argv, const std::filesystem::path& cwd,
                            const ExecLimits& limits = {},
                            const std::map<std::string, std::string>& env = {});

} // namespace fixcrew::sandbox
