// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/gindex/search.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace fixcrew::nav {

// In-memory view of file contents keyed by repo-relative path. Overlay
// entries shadow whatever is on disk, so unsaved edits can be navigated and
// diagnosed without writes.
class FileSnapshot {
public:
    void put(std::string path, std::string content) {
        files_[std::move(path)] = std::move(content);
    }
    const std::string* get(const std::string& path) const {
        auto it = files_.find(path);
        return it == files_.end() ? nullptr : &it->second;
    }
    const std::map<std::string, std::string>& files() const { return files_; }

    static FileSnapshot from_directory(const std::filesystem::path& root,
                                       const gindex::IndexOptions& options = {});

private:
    std::map<std::string, std::string> files_;
};

} // namespace fixcrew::nav
