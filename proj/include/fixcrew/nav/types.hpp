// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::nav {

// Ordered so that numeric comparison follows severity: Fatal > Error > ...
enum class Severity { Hint = 0, Info = 1, Warning = 2, Error = 3, Fatal = 4 };

std::string_view severity_name(Severity s);

struct Diagnostic {
    std::string path;
    long line = 1;
    Severity severity = Severity::Error;
    std::string code; // optional rule id
    std::string message;
};

// What the agent supplies: a file, a rough line, optionally the token it
// means, and the files it has browsed so far (in browse order).
struct PositionHint {
    std::string path;
    long line = 1;
    std::string identifier;
    std::vector<std::string> opened_files;
};

enum class ResolveTier { ExactLine, NearbyLine, OpenedFiles };

std::string_view resolve_tier_name(ResolveTier t);

struct ResolvedPosition {
    std::string path;
    long line = 1;
    long column = 1; // 1-based, first character of the identifier
    std::string identifier;
    ResolveTier tier = ResolveTier::ExactLine;
};

struct Location {
    std::string path;
    long line = 1;
    long column = 1;

    friend bool operator<(const Location& a, const Location& b) {
        if (a.path != b.path)
            return a.path < b.path;
        if (a.line != b.line)
            return a.line < b.line;
        return a.column < b.column;
    }
    friend bool operator==(const Location& a, const Location& b) {
        return a.path == b.path && a.line == b.line && a.column == b.column;
    }
};

} // namespace fixcrew::nav
