// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/orch/context.hpp"

#include "fixcrew/ckg/query.hpp"
#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace fixcrew::orch {

namespace {

std::string slice_lines(const std::string& content, long from, long to, long max_lines) {
    auto split = text::split_lines(content);
    long n = static_cast<long>(split.lines.size());
    from = std::max<long>(1, from);
    to = std::min(n, to);
    if (to - from + 1 > max_lines)
        to = from + max_lines - 1;
    std::string out;
    for (long l = from; l <= to; ++l) {
        out += split.lines[static_cast<std::size_t>(l - 1)];
        out += '\n';
    }
    return out;
}

// "path/to/file.py", line 12  |  path/to/file.py:12
const std::regex kTracebackRe("File \"([^\"]+)\", line ([0-9]+)|([A-Za-z0-9_./-]+\\.[A-Za-z0-9_]+):([0-9]+)");

std::string normalize_ref_path(std::string path, const nav::FileSnapshot& snapshot) {
    while (text::starts_with(path, "./"))
        path = path.substr(2);
    if (snapshot.get(path))
        return path;
    // suffix match against the snapshot (tracebacks often carry abs paths)
    for (const auto& [rel, _] : snapshot.files())
        if (text::ends_with(path, "/" + rel) || rel == path)
            return rel;
    return "";
}

} // namespace

std::string ContextBundle::render(std::size_t max_bytes) const {
    std::string out;
    if (!files.empty()) {
        out += "Relevant files:\n";
        for (const auto& f : files)
            out += "  " + f + "\n";
        out += "\n";
    }
    for (const auto& item : items) {
        std::string block = item.path + ":" + std::to_string(item.start_line) + "-" +
                            std::to_string(item.end_line) + " (" + item.provenance + ")\n" +
                            item.snippet + "\n";
        if (out.size() + block.size() > max_bytes)
            break;
        out += block;
    }
    return out;
}

ContextBundle search_context(const std::string& issue_title, const std::string& issue_body,
                             const ckg::KnowledgeGraph& graph, const nav::FileSnapshot& snapshot,
                             const PermissionMatrix& matrix, TraceLog& trace,
                             const ContextBudget& budget) {
    ContextBundle bundle;
    std::string issue_text = issue_title + "\n" + issue_body;
    std::set<std::string> seen_files;
    std::set<std::pair<std::string, long>> seen_spans;

    // Knowledge-graph lookup over the issue wording.
    if (!graph.empty()) {
        matrix.enforce(AgentRole::Searcher, Tool::CKG);
        ckg::QueryOptions options;
        options.limit = static_cast<std::size_t>(budget.max_items);
        auto ranked = ckg::query_entities(graph, issue_text, {}, options);
        trace.tool_use(AgentRole::Searcher, Tool::CKG, "query", issue_text,
                       std::to_string(ranked.items.size()) + " candidates");
        for (const auto& item : ranked.items) {
            if (static_cast<int>(bundle.items.size()) >= budget.max_items)
                break;
            if (item.score < 0.3)
                continue; // weak lexical echo, not context
            const auto& entity = graph.entity(item.id);
            if (entity.kind == ckg::EntityKind::File)
                continue;
            const std::string* content = snapshot.get(entity.location.path);
            if (!content)
                continue;
            if (!seen_spans.emplace(entity.location.path, entity.location.start_line).second)
                continue;
            bundle.items.push_back({entity.location.path, entity.location.start_line,
                                    entity.location.end_line,
                                    slice_lines(*content, entity.location.start_line,
                                                entity.location.end_line,
                                                budget.max_snippet_lines),
                                    "CKG", item.score});
            seen_files.insert(entity.location.path);
        }
    }

    // file:line references (tracebacks and the like) via the general index.
    {
        auto begin = std::sregex_iterator(issue_text.begin(), issue_text.end(), kTracebackRe);
        bool enforced = false;
        for (auto it = begin; it != std::sregex_iterator(); ++it) {
            if (static_cast<int>(bundle.items.size()) >= budget.max_items)
                break;
            std::string raw_path = (*it)[1].matched ? (*it)[1].str() : (*it)[3].str();
            std::string raw_line = (*it)[2].matched ? (*it)[2].str() : (*it)[4].str();
            std::string rel = normalize_ref_path(raw_path, snapshot);
            if (rel.empty())
                continue;
            if (!enforced) {
                matrix.enforce(AgentRole::Searcher, Tool::GeneralFileIndexing);
                enforced = true;
            }
            long line = std::stol(raw_line);
            const std::string* content = snapshot.get(rel);
            long from = std::max<long>(1, line - budget.snippet_radius);
            long to = line + budget.snippet_radius;
            if (!seen_spans.emplace(rel, from).second)
                continue;
            bundle.items.push_back({rel, from, to,
                                    slice_lines(*content, from, to, budget.max_snippet_lines),
                                    "Traceback", 1.0});
            seen_files.insert(rel);
            trace.tool_use(AgentRole::Searcher, Tool::GeneralFileIndexing, "locate",
                           rel + ":" + raw_line, "traceback reference");
        }
    }

    bundle.files.assign(seen_files.begin(), seen_files.end());
    if (bundle.empty())
        throw Error(ErrorCode::EmptyContext, "nothing retrievable for this issue");
    return bundle;
}

} // namespace fixcrew::orch
