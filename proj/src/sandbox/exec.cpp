// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/sandbox/exec.hpp"

#include "fixcrew/error.hpp"

#include <chrono>
#include <csignal>
#include <cstring>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace fixcrew::sandbox {

std::map<std::string, std::string> sandbox_env(const std::filesystem::path& cwd,
                                               const std::map<std::string, std::string>& overrides) {
    std::map<std::string, std::string> env;
    const char* path = ::getenv("PATH");
    env["PATH"] = path ? path : "/usr/local/bin:/usr/bin:/bin";
    env["HOME"] = cwd.string();
    env["LC_ALL"] = "C";
    env["PYTHONDONTWRITEBYTECODE"] = "1";
    for (const auto& [k, v] : overrides)
        env[k] = v;
    return env;
}

ExecutionResult run_process(const std::vector<std::string>& argv, const std::filesystem::path& cwd,
                            const ExecLimits& limits, const std::map<std::string, std::string>& env) {
    if (argv.empty())
        throw Error(ErrorCode::SpawnFailure, "empty command");

    int out_pipe[2], err_pipe[2], status_pipe[2];
    if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0 || pipe(status_pipe) != 0)
        throw Error(ErrorCode::SpawnFailure, "pipe failed");
    fcntl(status_pipe[1], F_SETFD, FD_CLOEXEC);

    std::map<std::string, std::string> effective = env.empty() ? sandbox_env(cwd) : env;

    auto started = std::chrono::steady_clock::now();
    pid_t pid = fork();
    if (pid < 0)
        throw Error(ErrorCode::SpawnFailure, "fork failed");

    if (pid == 0) {
        setpgid(0, 0);
        if (chdir(cwd.c_str()) != 0) {
            int err = errno;
            (void)!::write(status_pipe[1], &err, sizeof err);
            _exit(127);
        }
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        int devnull = open("/dev/null", O_RDONLY);
        if (devnull >= 0)
            dup2(devnull, STDIN_FILENO);
        close(out_pipe[0]);
        close(out_pipe[1]);
        close(err_pipe[0]);
        close(err_pipe[1]);
        close(status_pipe[0]);

        std::vector<char*> args;
        for (const auto& a : argv)
            args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        std::vector<std::string> env_strings;
        for (const auto& [k, v] : effective)
            env_strings.push_back(k + "=" + v);
        std::vector<char*> envp;
        for (auto& s : env_strings)
            envp.push_back(s.data());
        envp.push_back(nullptr);

        execvpe(args[0], args.data(), envp.data());
        int err = errno;
        (void)!::write(status_pipe[1], &err, sizeof err);
        _exit(127);
    }

    close(out_pipe[1]);
    close(err_pipe[1]);
    close(status_pipe[1]);

    // exec success closes the status pipe without bytes
    int exec_errno = 0;
    ssize_t status_n = ::read(status_pipe[0], &exec_errno, sizeof exec_errno);
    close(status_pipe[0]);
    if (status_n > 0) {
        kill(-pid, SIGKILL);
        waitpid(pid, nullptr, 0);
        close(out_pipe[0]);
        close(err_pipe[0]);
        throw Error(ErrorCode::SpawnFailure,
                    argv[0] + ": " + std::strerror(exec_errno));
    }

    ExecutionResult result;
    std::string* sinks[2] = {&result.stdout_text, &result.stderr_text};
    bool* truncated[2] = {&result.stdout_truncated, &result.stderr_truncated};
    int fds[2] = {out_pipe[0], err_pipe[0]};
    bool open_fd[2] = {true, true};

    auto deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(limits.timeout_seconds));

    char buf[8192];
    while (open_fd[0] || open_fd[1]) {
        pollfd pfds[2];
        nfds_t n = 0;
        for (int i = 0; i < 2; ++i)
            if (open_fd[i])
                pfds[n++] = {fds[i], POLLIN, 0};

        auto now = std::chrono::steady_clock::now();
        if (now >= deadline) {
            result.timed_out = true;
            kill(-pid, SIGKILL);
        }
        int wait_ms = result.timed_out
                          ? 1000
                          : static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                 deadline - now)
                                                 .count()) +
                                1;
        int rc = poll(pfds, n, wait_ms);
        if (rc == 0) {
            if (!result.timed_out)
                continue; // deadline check on the next pass
            break;        // killed and drained
        }
        nfds_t pi = 0;
        for (int i = 0; i < 2; ++i) {
            if (!open_fd[i])
                continue;
            pollfd& p = pfds[pi++];
            if (!(p.revents & (POLLIN | POLLHUP)))
                continue;
            ssize_t got = ::read(fds[i], buf, sizeof buf);
            if (got <= 0) {
                close(fds[i]);
                open_fd[i] = false;
                continue;
            }
            std::string* sink = sinks[i];
            if (sink->size() < limits.output_cap) {
                std::size_t room = limits.output_cap - sink->size();
                sink->append(buf, std::min<std::size_t>(room, static_cast<std::size_t>(got)));
                if (static_cast<std::size_t>(got) > room)
                    *truncated[i] = true;
            } else {
                *truncated[i] = true;
            }
        }
    }

    int status = 0;
    waitpid(pid, &status, 0);
    result.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (result.timed_out)
        result.exit_code = 128 + SIGKILL;
    else if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    else if (WIFSIGNALED(status))
        result.exit_code = 128 + WTERMSIG(status);
    return result;
}

} // namespace fixcrew::sandbox
