// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/ckg/store.hpp"

#include "fixcrew/error.hpp"

#include <json.hpp>

#include <fstream>

namespace fixcrew::ckg {

using nlohmann::json;

void save_graph(const KnowledgeGraph& graph, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::UnreadablePath, "cannot write " + file.string());

    json header = {{"format", kGraphFormatName},
                   {"version", kGraphFormatVersion},
                   {"snapshot_id", graph.snapshot_id()}};
    out << header.dump() << '\n';

    for (const auto& e : graph.entities()) {
        json rec = {{"t", "entity"},
                    {"id", e.id},
                    {"kind", std::string(entity_kind_name(e.kind))},
                    {"name", e.name},
                    {"path", e.location.path},
                    {"start", e.location.start_line},
                    {"end", e.location.end_line}};
        if (!e.signature.empty())
            rec["sig"] = e.signature;
        if (!e.doc.empty())
            rec["doc"] = e.doc;
        out << rec.dump() << '\n';
    }
    for (const auto& r : graph.relations()) {
        json rec = {{"t", "relation"},
                    {"src", r.src},
                    {"dst", r.dst},
                    {"kind", std::string(relation_kind_name(r.kind))},
                    {"path", r.site_path},
                    {"line", r.site_line}};
        out << rec.dump() << '\n';
    }
}

KnowledgeGraph load_graph(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::UnreadablePath, "cannot read " + file.string());

    std::string line;
    if (!std::getline(in, line))
        throw Error(ErrorCode::ParseFailure, file.string() + ": empty graph file");

    std::string snapshot_id;
    try {
        json header = json::parse(line);
        if (header.value("format", "") != kGraphFormatName)
            throw Error(ErrorCode::ParseFailure, file.string() + ": not a graph file");
        if (header.value("version", 0) != kGraphFormatVersion)
            throw Error(ErrorCode::ParseFailure,
                        file.string() + ": unsupported graph format version");
        snapshot_id = header.value("snapshot_id", "");
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseFailure, file.string() + ": bad header: " + e.what());
    }

    std::vector<CodeEntity> entities;
    std::vector<CodeRelation> relations;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseFailure,
                        file.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        std::string t = rec.value("t", "");
        if (t == "entity") {
            CodeEntity e;
            e.id = rec.value("id", 0ull);
            auto kind = entity_kind_from(rec.value("kind", ""));
            if (!kind)
                throw Error(ErrorCode::ParseFailure, file.string() + ":" + std::to_string(line_no) +
                                                         ": unknown entity kind");
            e.kind = *kind;
            e.name = rec.value("name", "");
            e.location.path = rec.value("path", "");
            e.location.start_line = rec.value("start", 1L);
            e.location.end_line = rec.value("end", 1L);
            e.signature = rec.value("sig", "");
            e.doc = rec.value("doc", "");
            entities.push_back(std::move(e));
        } else if (t == "relation") {
            CodeRelation r;
            r.src = rec.value("src", 0ull);
            r.dst = rec.value("dst", 0ull);
            auto kind = relation_kind_from(rec.value("kind", ""));
            if (!kind)
                throw Error(ErrorCode::ParseFailure, file.string() + ":" + std::to_string(line_no) +
                                                         ": unknown relation kind");
            r.kind = *kind;
            r.site_path = rec.value("path", "");
            r.site_line = rec.value("line", 0L);
            relations.push_back(std::move(r));
        } else {
            throw Error(ErrorCode::ParseFailure,
                        file.string() + ":" + std::to_string(line_no) + ": unknown record type");
        }
    }
    return KnowledgeGraph(std::move(entities), std::move(relations), snapshot_id);
}

} // namespace fixcrew::ckg
