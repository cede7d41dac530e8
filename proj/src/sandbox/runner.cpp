// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/sandbox/runner.hpp"

#include "fixcrew/error.hpp"

#include <stdexcept>

namespace fixcrew::sandbox {

ExecutionResult SubprocessRunner::execute(const Workspace& ws, const std::vector<std::string>& argv,
                                          const ExecLimits& limits) {
    return run_process(argv, ws.root(), limits, sandbox_env(ws.root()));
}

std::vector<std::string> container_argv(const std::string& cli, const std::string& image,
                                        const std::filesystem::path& workspace_root,
                                        const std::vector<std::string>& command) {
    std::vector<std::string> argv = {cli,
                                     "run",
                                     "--rm",
                                     "--network=none",
                                     "-v",
                                     workspace_root.string() + ":/work",
                                     "-w",
                                     "/work",
                                     image};
    argv.insert(argv.end(), command.begin(), command.end());
    return argv;
}

ExecutionResult ContainerRunner::execute(const Workspace& ws, const std::vector<std::string>& argv,
                                         const ExecLimits& limits) {
    try {
        return run_process(container_argv(cli_, image_, ws.root(), argv), ws.root(), limits,
                           sandbox_env(ws.root()));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SpawnFailure)
            throw Error(ErrorCode::SandboxUnavailable,
                        cli_ + " is not available: " + e.what());
        throw;
    }
}

ExecutionResult run_reproduction(Runner& runner, Workspace& ws, const std::string& script,
                                 const std::vector<std::string>& interpreter,
                                 const ExecLimits& limits) {
    if (script.empty())
        throw std::invalid_argument("reproduction script is empty");
    ws.write_file(kReservedScript, script);
    std::vector<std::string> argv = interpreter;
    argv.push_back(kReservedScript);
    return runner.execute(ws, argv, limits);
}

} // namespace fixcrew::sandbox
