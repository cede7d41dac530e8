// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/ckg/graph.hpp"

#include "fixcrew/error.hpp"

#include <algorithm>

namespace fixcrew::ckg {

std::string_view entity_kind_name(EntityKind k) {
    switch (k) {
    case EntityKind::File: return "File";
    case EntityKind::Class: return "Class";
    case EntityKind::Function: return "Function";
    case EntityKind::Method: return "Method";
    case EntityKind::Variable: return "Variable";
    case EntityKind::Struct: return "Struct";
    }
    return "?";
}

std::string_view relation_kind_name(RelationKind k) {
    switch (k) {
    case RelationKind::Contains: return "Contains";
    case RelationKind::Calls: return "Calls";
    case RelationKind::References: return "References";
    case RelationKind::Imports: return "Imports";
    case RelationKind::Inherits: return "Inherits";
    }
    return "?";
}

std::optional<EntityKind> entity_kind_from(std::string_view name) {
    for (EntityKind k : {EntityKind::File, EntityKind::Class, EntityKind::Function,
                         EntityKind::Method, EntityKind::Variable, EntityKind::Struct})
        if (entity_kind_name(k) == name)
            return k;
    return std::nullopt;
}

std::optional<RelationKind> relation_kind_from(std::string_view name) {
    for (RelationKind k : {RelationKind::Contains, RelationKind::Calls, RelationKind::References,
                           RelationKind::Imports, RelationKind::Inherits})
        if (relation_kind_name(k) == name)
            return k;
    return std::nullopt;
}

KnowledgeGraph::KnowledgeGraph(std::vector<CodeEntity> entities, std::vector<CodeRelation> relations,
                               std::string snapshot_id)
    : entities_(std::move(entities)), relations_(std::move(relations)),
      snapshot_id_(std::move(snapshot_id)) {}

const CodeEntity* KnowledgeGraph::find(EntityId id) const {
    if (id == 0 || id > entities_.size())
        return nullptr;
    return &entities_[id - 1];
}

const CodeEntity& KnowledgeGraph::entity(EntityId id) const {
    const CodeEntity* e = find(id);
    if (!e)
        throw Error(ErrorCode::UnknownEntity, "no entity with id " + std::to_string(id));
    return *e;
}

std::vector<EntityId> KnowledgeGraph::ids_named(std::string_view name) const {
    std::vector<EntityId> out;
    for (const auto& e : entities_)
        if (e.name == name)
            out.push_back(e.id);
    return out;
}

std::vector<std::pair<CodeRelation, CodeEntity>>
KnowledgeGraph::neighbors(EntityId id, const std::set<RelationKind>& kinds) const {
    entity(id); // throws on unknown ids
    std::vector<std::pair<CodeRelation, CodeEntity>> out;
    for (const auto& r : relations_) {
        if (!kinds.empty() && !kinds.count(r.kind))
            continue;
        if (r.src == id)
            out.emplace_back(r, entity(r.dst));
        else if (r.dst == id)
            out.emplace_back(r, entity(r.src));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.kind != b.first.kind)
            return a.first.kind < b.first.kind;
        if (a.first.site_path != b.first.site_path)
            return a.first.site_path < b.first.site_path;
        if (a.first.site_line != b.first.site_line)
            return a.first.site_line < b.first.site_line;
        return a.second.id < b.second.id;
    });
    return out;
}

std::vector<std::pair<CodeRelation, CodeEntity>>
neighbors(const KnowledgeGraph& graph, EntityId id, const std::set<RelationKind>& kinds) {
    return graph.neighbors(id, kinds);
}

std::vector<std::string> KnowledgeGraph::validate() const {
    std::vector<std::string> problems;
    auto complain = [&problems](std::string msg) { problems.push_back(std::move(msg)); };

    for (std::size_t i = 0; i < entities_.size(); ++i) {
        const CodeEntity& e = entities_[i];
        if (e.id != i + 1)
            complain("entity at slot " + std::to_string(i) + " has id " + std::to_string(e.id));
        if (e.location.start_line < 1 || e.location.end_line < e.location.start_line)
            complain("entity " + e.name + " has a bad span");
        if (e.kind == EntityKind::File) {
            std::string_view path = e.location.path;
            std::size_t slash = path.rfind('/');
            std::string_view base = slash == std::string_view::npos ? path : path.substr(slash + 1);
            if (e.name != base)
                complain("file entity " + e.name + " does not match path " + e.location.path);
        }
    }

    std::vector<EntityId> contains_parent(entities_.size() + 1, 0);
    for (const auto& r : relations_) {
        if (!find(r.src) || !find(r.dst)) {
            complain("dangling relation " + std::string(relation_kind_name(r.kind)) + " " +
                     std::to_string(r.src) + "->" + std::to_string(r.dst));
            continue;
        }
        if (r.kind == RelationKind::Contains) {
            if (contains_parent[r.dst] != 0)
                complain("entity " + entity(r.dst).name + " has two Contains parents");
            contains_parent[r.dst] = r.src;
            if (entity(r.dst).kind == EntityKind::File)
                complain("file entity " + entity(r.dst).name + " is contained by something");
        }
        if (r.kind == RelationKind::Calls) {
            const CodeEntity& src = entity(r.src);
            if (r.site_path != src.location.path || r.site_line < src.location.start_line ||
                r.site_line > src.location.end_line)
                complain("call site " + r.site_path + ":" + std::to_string(r.site_line) +
                         " outside caller " + src.name);
        }
    }

    // Contains must form a forest rooted at files: walking parents terminates.
    for (const auto& e : entities_) {
        EntityId cur = e.id;
        std::size_t steps = 0;
        while (cur != 0 && steps <= entities_.size()) {
            cur = contains_parent[cur];
            ++steps;
        }
        if (steps > entities_.size())
            complain("Contains cycle through entity " + e.name);
        if (e.kind != EntityKind::File && contains_parent[e.id] == 0)
            complain("non-file entity " + e.name + " has no Contains parent");
    }
    return problems;
}

} // namespace fixcrew::ckg
