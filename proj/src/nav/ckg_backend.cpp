// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/nav/ckg_backend.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>

namespace fixcrew::nav {

namespace {

long identifier_column(const FileSnapshot& snapshot, const std::string& path, long line,
                       const std::string& identifier) {
    const std::string* content = snapshot.get(path);
    if (!content)
        return 1;
    auto lines = text::split_lines(*content).lines;
    if (line < 1 || line > static_cast<long>(lines.size()))
        return 1;
    for (const auto& hit : text::identifiers_on_line(lines[static_cast<std::size_t>(line - 1)]))
        if (hit.token == identifier)
            return static_cast<long>(hit.column);
    return 1;
}

} // namespace

std::vector<Location> CkgBackend::navigate(NavKind kind, const ResolvedPosition& pos) {
    const std::string* content = snapshot_.get(pos.path);
    if (content) {
        long line_count = static_cast<long>(text::split_lines(*content).lines.size());
        if (pos.line < 1 || pos.line > std::max<long>(1, line_count))
            throw Error(ErrorCode::PositionOutOfRange,
                        pos.path + ":" + std::to_string(pos.line) + " is outside the file");
    }

    std::vector<Location> out;
    if (pos.identifier.empty())
        return out;
    auto ids = graph_.ids_named(pos.identifier);

    if (kind == NavKind::Definition) {
        for (auto id : ids) {
            const auto& e = graph_.entity(id);
            if (e.kind == ckg::EntityKind::File)
                continue;
            out.push_back({e.location.path, e.location.start_line,
                           identifier_column(snapshot_, e.location.path, e.location.start_line,
                                             pos.identifier)});
        }
    } else {
        for (const auto& r : graph_.relations()) {
            if (r.kind != ckg::RelationKind::Calls && r.kind != ckg::RelationKind::References)
                continue;
            if (std::find(ids.begin(), ids.end(), r.dst) == ids.end())
                continue;
            out.push_back({r.site_path, r.site_line,
                           identifier_column(snapshot_, r.site_path, r.site_line, pos.identifier)});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace fixcrew::nav
