// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/patch/diff.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fixcrew::sandbox {

// Reserved directory inside a workspace for reproduction scripts; excluded
// from resets and solution diffs.
inline constexpr const char* kReservedDir = ".fixcrew-repro";
inline constexpr const char* kReservedScript = ".fixcrew-repro/reproduce.py";

// An isolated working copy of a repository plus a pristine snapshot taken at
// creation. The snapshot lives next to the working copy, so resets restore
// byte equality without touching the original tree.
class Workspace {
public:
    // Copies `source_repo` (minus version-control metadata) into a fresh
    // scratch area under `scratch_parent` (temp dir by default).
    static Workspace create(const std::filesystem::path& source_repo,
                            const std::filesystem::path& scratch_parent = {});

    Workspace(Workspace&&) noexcept;
    Workspace& operator=(Workspace&&) noexcept;
    ~Workspace();

    const std::filesystem::path& root() const { return root_; }
    const std::filesystem::path& pristine() const { return pristine_; }

    std::string read_file(const std::string& rel) const; // throws UnreadablePath
    bool file_exists(const std::string& rel) const;
    void write_file(const std::string& rel, std::string_view content);

    // Restores the working copy to byte equality with the snapshot. The
    // reserved reproduction directory survives. Idempotent.
    void reset();

    // Unified diffs of every changed/added/removed tracked file vs the
    // snapshot, path-sorted. The reserved directory never appears.
    patch::PatchSet solution_diff(int context = 3) const;

    // Keeps the scratch directory on destruction (for debugging).
    void keep_scratch(bool keep) { keep_ = keep; }

private:
    Workspace() = default;
    std::filesystem::path scratch_;
    std::filesystem::path root_;
    std::filesystem::path pristine_;
    bool keep_ = false;
    bool moved_from_ = false;
};

} // namespace fixcrew::sandbox
