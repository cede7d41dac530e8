// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/sandbox/exec.hpp"
#include "fixcrew/sandbox/workspace.hpp"

#include <string>
#include <vector>

namespace fixcrew::sandbox {

// Execution strategy for commands inside a workspace. The subprocess runner
// isolates by working on the temp-directory copy with a scrubbed
// environment; the container runner adds kernel-level isolation and no
// network, matching production deployments.
class Runner {
public:
    virtual ~Runner() = default;
    virtual ExecutionResult execute(const Workspace& ws, const std::vector<std::string>& argv,
                                    const ExecLimits& limits = {}) = 0;
};

class SubprocessRunner final : public Runner {
public:
    ExecutionResult execute(const Workspace& ws, const std::vector<std::string>& argv,
                            const ExecLimits& limits = {}) override;
};

// Shells out to a container CLI ("docker run --rm --network=none ...").
class ContainerRunner final : public Runner {
public:
    ContainerRunner(std::string image, std::string cli = "docker")
        : image_(std::move(image)), cli_(std::move(cli)) {}

    ExecutionResult execute(const Workspace& ws, const std::vector<std::string>& argv,
                            const ExecLimits& limits = {}) override;

private:
    std::string image_;
    std::string cli_;
};

// Container command assembly, exposed for verification without a daemon.
std::vector<std::string> container_argv(const std::string& cli, const std::string& image,
                                        const std::filesystem::path& workspace_root,
                                        const std::vector<std::string>& command);

// Materializes the script at the reserved path and runs it via the runner.
// The reserved path is excluded from resets and solution diffs.
ExecutionResult run_reproduction(Runner& runner, Workspace& ws, const std::string& script,
                                 const std::vector<std::string>& interpreter,
                                 const ExecLimits& limits = {});

} // namespace fixcrew::sandbox
