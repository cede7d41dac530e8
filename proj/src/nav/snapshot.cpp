// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/nav/snapshot.hpp"

#include "fixcrew/error.hpp"

#include <fstream>

namespace fixcrew::nav {

FileSnapshot FileSnapshot::from_directory(const std::filesystem::path& root,
                                          const gindex::IndexOptions& options) {
    FileSnapshot snapshot;
    for (const auto& rel : gindex::list_tree(root, options)) {
        std::ifstream in(root / rel, std::ios::binary);
        if (!in)
            throw Error(ErrorCode::UnreadablePath, (root / rel).string());
        snapshot.put(rel, std::string(std::istreambuf_iterator<char>(in),
                                      std::istreambuf_iterator<char>()));
    }
    return snapshot;
}

} // namespace fixcrew::nav
