// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/sandbox/workspace.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/hash.hpp"
#include "fixcrew/text.hpp"

#include <fstream>
#include <set>

#include <unistd.h>

namespace fs = std::filesystem;

namespace fixcrew::sandbox {

namespace {

bool is_vcs_dir(const std::string& name) {
    return name == ".git" || name == ".hg" || name == ".svn";
}

void copy_tree(const fs::path& from, const fs::path& to) {
    fs::create_directories(to);
    for (const auto& entry : fs::directory_iterator(from)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_directory()) {
            if (is_vcs_dir(name) || name == kReservedDir)
                continue;
            copy_tree(entry.path(), to / name);
        } else if (entry.is_regular_file()) {
            fs::copy_file(entry.path(), to / name, fs::copy_options::overwrite_existing);
        }
    }
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::UnreadablePath, p.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void spew(const fs::path& p, std::string_view content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::UnreadablePath, "cannot write " + p.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

// Relative paths of regular files, '/'-separated, reserved dir excluded.
std::set<std::string> tracked_files(const fs::path& root) {
    std::set<std::string> out;
    if (!fs::exists(root))
        return out;
    for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator();
         ++it) {
        const std::string name = it->path().filename().string();
        if (it->is_directory() && (is_vcs_dir(name) || name == kReservedDir)) {
            it.disable_recursion_pending();
            continue;
        }
        if (it->is_regular_file())
            out.insert(fs::relative(it->path(), root).generic_string());
    }
    return out;
}

} // namespace

Workspace Workspace::create(const fs::path& source_repo, const fs::path& scratch_parent) {
    if (!fs::is_directory(source_repo))
        throw Error(ErrorCode::UnreadablePath, source_repo.string());

    fs::path parent = scratch_parent.empty() ? fs::temp_directory_path() : scratch_parent;
    static int counter = 0;
    fs::path scratch;
    do {
        scratch = parent / ("fixcrew_ws_" + std::to_string(::getpid()) + "_" +
                            std::to_string(counter++));
    } while (fs::exists(scratch));

    Workspace ws;
    ws.scratch_ = scratch;
    ws.root_ = scratch / "work";
    ws.pristine_ = scratch / "pristine";
    copy_tree(source_repo, ws.root_);
    copy_tree(ws.root_, ws.pristine_);
    return ws;
}

Workspace::Workspace(Workspace&& other) noexcept
    : scratch_(std::move(other.scratch_)), root_(std::move(other.root_)),
      pristine_(std::move(other.pristine_)), keep_(other.keep_) {
    other.moved_from_ = true;
}

Workspace& Workspace::operator=(Workspace&& other) noexcept {
    if (this != &other) {
        scratch_ = std::move(other.scratch_);
        root_ = std::move(other.root_);
        pristine_ = std::move(other.pristine_);
        keep_ = other.keep_;
        other.moved_from_ = true;
    }
    return *this;
}

Workspace::~Workspace() {
    if (!moved_from_ && !keep_ && !scratch_.empty()) {
        std::error_code ec;
        fs::remove_all(scratch_, ec);
    }
}

std::string Workspace::read_file(const std::string& rel) const {
    return slurp(root_ / rel);
}

bool Workspace::file_exists(const std::string& rel) const {
    return fs::is_regular_file(root_ / rel);
}

void Workspace::write_file(const std::string& rel, std::string_view content) {
    spew(root_ / rel, content);
}

void Workspace::reset() {
    auto want = tracked_files(pristine_);
    auto have = tracked_files(root_);

    for (const auto& rel : have) {
        if (!want.count(rel)) {
            std::error_code ec;
            fs::remove(root_ / rel, ec);
        }
    }
    for (const auto& rel : want) {
        fs::path src = pristine_ / rel;
        fs::path dst = root_ / rel;
        if (fs::is_regular_file(dst) && slurp(dst) == slurp(src))
            continue;
        fs::create_directories(dst.parent_path());
        fs::copy_file(src, dst, fs::copy_options::overwrite_existing);
    }
    // prune directories that only existed for removed files
    for (auto it = fs::recursive_directory_iterator(root_); it != fs::recursive_directory_iterator();
         ++it) {
        if (it->is_directory() && it->path().filename() == kReservedDir)
            it.disable_recursion_pending();
    }
    std::vector<fs::path> dirs;
    for (auto it = fs::recursive_directory_iterator(root_); it != fs::recursive_directory_iterator();
         ++it)
        if (it->is_directory() && it->path().filename() != kReservedDir)
            dirs.push_back(it->path());
    std::sort(dirs.rbegin(), dirs.rend());
    for (const auto& d : dirs) {
        if (text::contains(d.generic_string(), kReservedDir))
            continue;
        std::error_code ec;
        if (fs::is_empty(d, ec) && !ec)
            fs::remove(d, ec);
    }
}

patch::PatchSet Workspace::solution_diff(int context) const {
    patch::PatchSet set;
    auto before = tracked_files(pristine_);
    auto after = tracked_files(root_);

    std::set<std::string> all;
    all.insert(before.begin(), before.end());
    all.insert(after.begin(), after.end());

    for (const auto& rel : all) {
        bool in_before = before.count(rel) > 0;
        bool in_after = after.count(rel) > 0;
        std::string old_content = in_before ? slurp(pristine_ / rel) : "";
        std::string new_content = in_after ? slurp(root_ / rel) : "";
        if (old_content == new_content && in_before == in_after)
            continue;
        if (old_content.find('\0') != std::string::npos ||
            new_content.find('\0') != std::string::npos)
            continue; // binary payloads carry no textual diff
        auto diff = patch::make_diff(old_content, new_content,
                                     in_before ? rel : std::string("/dev/null"),
                                     in_after ? rel : std::string("/dev/null"), context);
        if (!diff.empty())
            set.files.push_back(std::move(diff));
    }
    return set;
}

} // namespace fixcrew::sandbox
