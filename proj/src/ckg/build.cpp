// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/ckg/build.hpp"

#include "fixcrew/ckg/extractor.hpp"
#include "fixcrew/error.hpp"
#include "fixcrew/hash.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <thread>

namespace fs = std::filesystem;

namespace fixcrew::ckg {

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::UnreadablePath, p.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct FileWork {
    std::string rel;
    const Extractor* extractor;
    std::string content;
    FileParse parse;
    bool failed = false;
    std::string failure;
};

} // namespace

KnowledgeGraph build_graph(const fs::path& repo_root, const BuildOptions& options,
                           BuildReport* report) {
    std::vector<const Extractor*> extractors;
    for (const auto& lang : options.languages) {
        const Extractor* e = extractor_for_language(lang);
        if (e)
            extractors.push_back(e);
    }

    auto tree = gindex::list_tree(repo_root, options.index); // throws UnreadablePath
    if (tree.empty())
        return KnowledgeGraph({}, {}, to_hex(kFnvOffset));

    std::vector<FileWork> work;
    for (const auto& rel : tree) {
        for (const Extractor* e : extractors) {
            if (e->handles(rel)) {
                work.push_back({rel, e, read_file(repo_root / rel), {}, false, ""});
                break;
            }
        }
    }
    if (work.empty())
        throw Error(ErrorCode::NoExtractorAvailable,
                    "no file under " + repo_root.string() + " matches the requested languages");

    std::uint64_t snap = kFnvOffset;
    for (const auto& w : work) {
        snap = fnv1a64(w.rel, snap);
        snap = fnv1a64(std::string_view("\0", 1), snap);
        snap = fnv1a64(w.content, snap);
    }

    auto run_parse = [](FileWork& w) {
        try {
            w.parse = w.extractor->parse(w.content);
        } catch (const std::exception& e) {
            w.failed = true;
            w.failure = e.what();
        }
    };
    if (options.parallel && work.size() > 1) {
        std::size_t batch = std::max<std::size_t>(1, std::thread::hardware_concurrency());
        for (std::size_t i = 0; i < work.size(); i += batch) {
            std::vector<std::future<void>> futures;
            for (std::size_t j = i; j < std::min(work.size(), i + batch); ++j)
                futures.push_back(std::async(std::launch::async, run_parse, std::ref(work[j])));
            for (auto& f : futures)
                f.get();
        }
    } else {
        for (auto& w : work)
            run_parse(w);
    }

    BuildReport local_report;
    BuildReport& rep = report ? *report : local_report;

    std::vector<CodeEntity> entities;
    std::vector<CodeRelation> relations;

    struct FileRecord {
        const FileWork* work;
        EntityId file_id;
        std::vector<EntityId> local_to_global;
    };
    std::vector<FileRecord> records;

    auto next_id = [&entities]() { return static_cast<EntityId>(entities.size() + 1); };

    for (auto& w : work) {
        if (w.failed) {
            rep.skipped.emplace_back(w.rel, w.failure);
            continue;
        }
        ++rep.files_indexed;
        FileRecord rec;
        rec.work = &w;

        CodeEntity file;
        file.id = next_id();
        file.kind = EntityKind::File;
        std::size_t slash = w.rel.rfind('/');
        file.name = slash == std::string::npos ? w.rel : w.rel.substr(slash + 1);
        file.location.path = w.rel;
        file.location.start_line = 1;
        long line_count = 1;
        for (char c : w.content)
            if (c == '\n')
                ++line_count;
        file.location.end_line = std::max<long>(1, line_count);
        rec.file_id = file.id;
        entities.push_back(std::move(file));

        for (const auto& le : w.parse.entities) {
            CodeEntity e;
            e.id = next_id();
            e.kind = le.kind;
            e.name = le.name;
            e.location = {w.rel, le.start_line, std::max(le.start_line, le.end_line)};
            e.signature = le.signature;
            e.doc = le.doc;
            rec.local_to_global.push_back(e.id);
            entities.push_back(std::move(e));
        }
        for (std::size_t k = 0; k < w.parse.entities.size(); ++k) {
            int parent = w.parse.entities[k].parent;
            EntityId parent_id =
                parent < 0 ? rec.file_id : rec.local_to_global[static_cast<std::size_t>(parent)];
            relations.push_back({parent_id, rec.local_to_global[k], RelationKind::Contains, w.rel,
                                 w.parse.entities[k].start_line});
        }
        records.push_back(std::move(rec));
    }

    // Name tables for resolution.
    std::map<std::string, std::vector<EntityId>, std::less<>> callables, ref_targets, class_like;
    for (const auto& e : entities) {
        switch (e.kind) {
        case EntityKind::Function:
        case EntityKind::Method:
            callables[e.name].push_back(e.id);
            break;
        case EntityKind::Class:
        case EntityKind::Struct:
            callables[e.name].push_back(e.id); // constructor-style calls
            class_like[e.name].push_back(e.id);
            ref_targets[e.name].push_back(e.id);
            break;
        case EntityKind::Variable:
            ref_targets[e.name].push_back(e.id);
            break;
        case EntityKind::File:
            break;
        }
    }

    for (const auto& rec : records) {
        const FileWork& w = *rec.work;
        for (const auto& call : w.parse.calls) {
            auto it = callables.find(call.name);
            if (it == callables.end()) {
                ++rep.unresolved_calls;
                continue;
            }
            if (it->second.size() > 1)
                ++rep.ambiguous_calls;
            EntityId src = rec.local_to_global[static_cast<std::size_t>(call.src)];
            relations.push_back({src, it->second.front(), RelationKind::Calls, w.rel, call.line});
        }
        std::set<std::tuple<EntityId, EntityId, long>> seen_refs;
        for (const auto& ref : w.parse.references) {
            auto it = ref_targets.find(ref.name);
            if (it == ref_targets.end())
                continue; // locals and library names; not knowledge-graph targets
            EntityId src = rec.local_to_global[static_cast<std::size_t>(ref.src)];
            EntityId dst = it->second.front();
            if (dst == src)
                continue;
            if (!seen_refs.emplace(src, dst, ref.line).second)
                continue;
            relations.push_back({src, dst, RelationKind::References, w.rel, ref.line});
        }
        for (const auto& inh : w.parse.inherits) {
            auto it = class_like.find(inh.name);
            if (it == class_like.end()) {
                ++rep.unresolved_inherits;
                continue;
            }
            EntityId src = rec.local_to_global[static_cast<std::size_t>(inh.src)];
            relations.push_back({src, it->second.front(), RelationKind::Inherits, w.rel, inh.line});
        }
        std::set<std::pair<EntityId, EntityId>> seen_imports;
        for (const auto& imp : w.parse.imports) {
            bool any = false;
            for (const auto& other : records) {
                if (other.file_id == rec.file_id)
                    continue;
                if (w.extractor->import_matches(imp.module, w.rel, other.work->rel)) {
                    if (seen_imports.emplace(rec.file_id, other.file_id).second)
                        relations.push_back(
                            {rec.file_id, other.file_id, RelationKind::Imports, w.rel, imp.line});
                    any = true;
                }
            }
            if (!any)
                ++rep.unresolved_imports;
        }
    }

    return KnowledgeGraph(std::move(entities), std::move(relations), to_hex(snap));
}

} // namespace fixcrew::ckg
