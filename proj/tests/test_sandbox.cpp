// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixcrew/error.hpp"
#include "fixcrew/hash.hpp"
#include "fixcrew/sandbox/runner.hpp"

#include <filesystem>
#include <fstream>
#include <map>

namespace fs = std::filesystem;
using namespace fixcrew;
using namespace fixcrew::sandbox;

namespace {

const fs::path kBuggyRepo = fs::path(FIXCREW_FIXTURE_DIR) / "buggy_calc";

// Content hash of every regular file under root, for byte-equality checks.
std::map<std::string, std::string> tree_hash(const fs::path& root) {
    std::map<std::string, std::string> out;
    for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator();
         ++it) {
        if (!it->is_regular_file())
            continue;
        std::ifstream in(it->path(), std::ios::binary);
        std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        out[fs::relative(it->path(), root).generic_string()] = digest(content);
    }
    return out;
}

const char* kFailingRepro = "import sys, os\n"
                            "sys.path.insert(0, os.getcwd())\n"
                            "from calc.stats import mean\n"
                            "assert mean([2, 4, 6]) == 4, 'mean is wrong'\n"
                            "print('mean ok')\n";

} // namespace

TEST_CASE("a trivial command runs with captured stdout") {
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;
    auto result = runner.execute(ws, {"echo", "ok"});
    CHECK(result.exit_code == 0);
    CHECK(result.stdout_text == "ok\n");
    CHECK(result.stderr_text.empty());
    CHECK_FALSE(result.timed_out);
}

TEST_CASE("a crashing script delivers its full stderr") {
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;
    ws.write_file("boom.py", "raise RuntimeError('kaboom: the widget exploded')\n");
    auto result = runner.execute(ws, {"python3", "boom.py"});
    CHECK(result.exit_code != 0);
    CHECK(result.stderr_text.find("RuntimeError") != std::string::npos);
    CHECK(result.stderr_text.find("kaboom: the widget exploded") != std::string::npos);
    CHECK(result.stderr_text.find("Traceback") != std::string::npos);
}

TEST_CASE("an endless loop is killed at the timeout") {
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;
    ExecLimits limits;
    limits.timeout_seconds = 1.0;
    auto result = runner.execute(ws, {"python3", "-c", "while True:\n pass"}, limits);
    CHECK(result.timed_out);
    CHECK(result.duration_seconds >= 1.0);
    CHECK(result.duration_seconds < 10.0);
    CHECK(result.exit_code == 137);
}

TEST_CASE("output beyond the cap is dropped and flagged") {
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;
    ExecLimits limits;
    limits.output_cap = 1024;
    auto result = runner.execute(ws, {"python3", "-c", "print('x' * 100000)"}, limits);
    CHECK(result.stdout_truncated);
    CHECK(result.stdout_text.size() == 1024);
    CHECK(result.exit_code == 0);
}

TEST_CASE("a missing binary is a spawn failure") {
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;
    try {
        runner.execute(ws, {"definitely-not-a-real-binary-xyz"});
        FAIL("expected SpawnFailure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SpawnFailure);
    }
}

TEST_CASE("the reproduction script fails on the seeded bug and passes on the fix") {
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;

    auto before = run_reproduction(runner, ws, kFailingRepro, {"python3"});
    CHECK(before.exit_code != 0);
    CHECK(before.stderr_text.find("AssertionError") != std::string::npos);

    std::string fixed = ws.read_file("calc/stats.py");
    auto at = fixed.find("(len(values) - 1)");
    REQUIRE(at != std::string::npos);
    fixed.replace(at, 17, "len(values)");
    ws.write_file("calc/stats.py", fixed);

    auto after = run_reproduction(runner, ws, kFailingRepro, {"python3"});
    CHECK(after.exit_code == 0);
    CHECK(after.stdout_text.find("mean ok") != std::string::npos);
}

TEST_CASE("an empty reproduction script is a precondition error") {
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;
    CHECK_THROWS_AS(run_reproduction(runner, ws, "", {"python3"}), std::invalid_argument);
}

TEST_CASE("modify two files, reset, byte equality returns") {
    auto ws = Workspace::create(kBuggyRepo);
    auto pristine_hash = tree_hash(ws.pristine());

    ws.write_file("calc/stats.py", "clobbered\n");
    ws.write_file("README.md", "also clobbered\n");
    CHECK(tree_hash(ws.root()) != pristine_hash);

    ws.reset();
    CHECK(tree_hash(ws.root()) == pristine_hash);
}

TEST_CASE("reset on an untouched workspace is a no-op and idempotent") {
    auto ws = Workspace::create(kBuggyRepo);
    auto before = tree_hash(ws.root());
    ws.reset();
    CHECK(tree_hash(ws.root()) == before);
    ws.reset();
    CHECK(tree_hash(ws.root()) == before);
}

TEST_CASE("files created after the snapshot vanish on reset") {
    auto ws = Workspace::create(kBuggyRepo);
    ws.write_file("calc/extra.py", "TEMP = True\n");
    ws.write_file("deep/nested/new.txt", "x\n");
    ws.reset();
    CHECK_FALSE(ws.file_exists("calc/extra.py"));
    CHECK_FALSE(ws.file_exists("deep/nested/new.txt"));
    CHECK_FALSE(fs::exists(ws.root() / "deep"));
}

TEST_CASE("the reproduction script survives reset but stays out of diffs") {
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;
    run_reproduction(runner, ws, kFailingRepro, {"python3"});
    REQUIRE(ws.file_exists(kReservedScript));

    ws.reset();
    CHECK(ws.file_exists(kReservedScript));

    auto diff = ws.solution_diff();
    CHECK(diff.empty());

    // apply a fix: only the fix shows up
    std::string fixed = ws.read_file("calc/stats.py");
    auto at = fixed.find("(len(values) - 1)");
    REQUIRE(at != std::string::npos);
    fixed.replace(at, 17, "len(values)");
    ws.write_file("calc/stats.py", fixed);

    auto diff2 = ws.solution_diff();
    REQUIRE(diff2.files.size() == 1);
    CHECK(diff2.files[0].new_path == "calc/stats.py");
    REQUIRE(diff2.files[0].hunks.size() == 1);
}

TEST_CASE("solution diff is empty right after creation and after reset") {
    auto ws = Workspace::create(kBuggyRepo);
    CHECK(ws.solution_diff().empty());
    ws.write_file("calc/stats.py", "wrecked\n");
    CHECK_FALSE(ws.solution_diff().empty());
    ws.reset();
    CHECK(ws.solution_diff().empty());
}

TEST_CASE("new and deleted files appear with /dev/null sides") {
    auto ws = Workspace::create(kBuggyRepo);
    ws.write_file("fresh.py", "NEW = 1\n");
    fs::remove(ws.root() / "README.md");
    auto set = ws.solution_diff();
    REQUIRE(set.files.size() == 2);
    CHECK(set.files[0].old_path == "README.md");
    CHECK(set.files[0].new_path == "/dev/null");
    CHECK(set.files[1].old_path == "/dev/null");
    CHECK(set.files[1].new_path == "fresh.py");
}

TEST_CASE("escape attempts leave the original tree unchanged") {
    auto source_before = tree_hash(kBuggyRepo);
    auto ws = Workspace::create(kBuggyRepo);
    SubprocessRunner runner;
    auto result = runner.execute(
        ws, {"python3", "-c",
             "import os\n"
             "open('../escape1.txt', 'w').write('out')\n"
             "open('../../escape2.txt', 'w').write('out')\n"
             "print('escapes attempted from', os.getcwd())\n"});
    CHECK(result.exit_code == 0);
    CHECK(tree_hash(kBuggyRepo) == source_before);
    // the workspace contents themselves are also untouched
    CHECK(ws.solution_diff().empty());
}

TEST_CASE("container command assembly pins isolation flags") {
    auto argv = container_argv("docker", "repo-image:latest", "/scratch/ws/work",
                               {"python3", "repro.py"});
    REQUIRE(argv.size() == 11);
    CHECK(argv[0] == "docker");
    CHECK(argv[1] == "run");
    CHECK(argv[2] == "--rm");
    CHECK(argv[3] == "--network=none");
    CHECK(argv[4] == "-v");
    CHECK(argv[5] == "/scratch/ws/work:/work");
    CHECK(argv[6] == "-w");
    CHECK(argv[7] == "/work");
    CHECK(argv[8] == "repo-image:latest");
    CHECK(argv[9] == "python3");
}

TEST_CASE("a missing container daemon reports SandboxUnavailable") {
    auto ws = Workspace::create(kBuggyRepo);
    ContainerRunner runner("img", "definitely-not-docker-xyz");
    try {
        runner.execute(ws, {"true"});
        FAIL("expected SandboxUnavailable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SandboxUnavailable);
    }
}
