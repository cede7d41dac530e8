// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/gindex/search.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <fstream>
#include <regex>

namespace fs = std::filesystem;

namespace fixcrew::gindex {

namespace {

bool is_excluded_dir(const std::string& name, const IndexOptions& options) {
    return std::find(options.exclude_dirs.begin(), options.exclude_dirs.end(), name) !=
           options.exclude_dirs.end();
}

void walk(const fs::path& root, const fs::path& dir, const IndexOptions& options,
          std::vector<std::string>& out) {
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec)
        throw Error(ErrorCode::UnreadablePath, dir.string() + ": " + ec.message());
    for (const auto& entry : it) {
        const fs::path& p = entry.path();
        if (entry.is_directory(ec)) {
            if (!is_excluded_dir(p.filename().string(), options))
                walk(root, p, options, out);
        } else if (entry.is_regular_file(ec)) {
            out.push_back(fs::relative(p, root).generic_string());
        }
    }
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::UnreadablePath, p.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool looks_binary(std::string_view content) {
    std::size_t probe = std::min<std::size_t>(content.size(), 8192);
    return content.substr(0, probe).find('\0') != std::string_view::npos;
}

} // namespace

std::string glob_to_regex(std::string_view glob) {
    std::string out = "^";
    std::size_t i = 0;
    const std::size_t n = glob.size();
    while (i < n) {
        char c = glob[i];
        if (c == '*') {
            if (i + 1 < n && glob[i + 1] == '*') {
                if (i + 2 < n && glob[i + 2] == '/') {
                    out += "(?:.*/)?";
                    i += 3;
                } else {
                    out += ".*";
                    i += 2;
                }
            } else {
                out += "[^/]*";
                ++i;
            }
        } else if (c == '?') {
            out += "[^/]";
            ++i;
        } else if (c == '[') {
            std::size_t j = i + 1;
            if (j < n && (glob[j] == '!' || glob[j] == '^'))
                ++j;
            if (j < n && glob[j] == ']')
                ++j; // literal ']' as the first class member
            while (j < n && glob[j] != ']')
                ++j;
            if (j >= n)
                throw Error(ErrorCode::InvalidGlob, "unterminated character class in " + std::string(glob));
            std::string cls(glob.substr(i, j - i + 1));
            if (cls.size() > 1 && cls[1] == '!')
                cls[1] = '^';
            out += cls;
            i = j + 1;
        } else {
            if (std::string_view("\\^$.|+(){}").find(c) != std::string_view::npos)
                out += '\\';
            out += c;
            ++i;
        }
    }
    out += "$";
    return out;
}

std::vector<std::string> list_tree(const fs::path& root, const IndexOptions& options) {
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw Error(ErrorCode::UnreadablePath, root.string());
    std::vector<std::string> out;
    walk(root, root, options, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> find_file(const fs::path& root, std::string_view pattern,
                                   const IndexOptions& options) {
    std::regex re;
    try {
        re.assign(glob_to_regex(pattern), std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
        throw Error(ErrorCode::InvalidGlob, std::string(pattern) + ": " + e.what());
    }
    const bool full_path = pattern.find('/') != std::string_view::npos;

    std::vector<std::string> out;
    for (auto& rel : list_tree(root, options)) {
        std::string_view subject = rel;
        if (!full_path) {
            std::size_t slash = rel.rfind('/');
            if (slash != std::string::npos)
                subject = std::string_view(rel).substr(slash + 1);
        }
        if (std::regex_match(subject.begin(), subject.end(), re))
            out.push_back(rel);
    }
    return out; // list_tree output is already sorted
}

GrepResult grep(const fs::path& root, std::string_view pattern,
                const std::optional<std::string>& scope, const IndexOptions& options) {
    std::regex re;
    try {
        re.assign(std::string(pattern), std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
        throw Error(ErrorCode::InvalidPattern, std::string(pattern) + ": " + e.what());
    }

    std::vector<std::string> candidates;
    std::error_code ec;
    if (fs::is_regular_file(root, ec) && !scope.has_value()) {
        candidates.push_back(root.filename().generic_string());
    } else {
        candidates = list_tree(root, options);
    }
    if (scope.has_value()) {
        std::string prefix = *scope;
        while (!prefix.empty() && prefix.back() == '/')
            prefix.pop_back();
        std::erase_if(candidates, [&prefix](const std::string& rel) {
            return rel != prefix && !text::starts_with(rel, prefix + "/");
        });
    }

    GrepResult result;
    for (const auto& rel : candidates) {
        fs::path full = fs::is_regular_file(root, ec) && !scope.has_value() ? root : root / rel;
        std::string content = read_file(full);
        if (looks_binary(content))
            continue;
        auto split = text::split_lines(content);
        for (std::size_t li = 0; li < split.lines.size(); ++li) {
            const std::string& line = split.lines[li];
            auto begin = std::cregex_iterator(line.data(), line.data() + line.size(), re);
            for (auto m = begin; m != std::cregex_iterator(); ++m) {
                if (result.matches.size() >= options.match_cap) {
                    result.truncated = true;
                    return result;
                }
                result.matches.push_back(
                    {rel, static_cast<long>(li) + 1, static_cast<long>(m->position(0)) + 1, line});
            }
        }
    }
    return result;
}

} // namespace fixcrew::gindex
