// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fixcrew::ckg {

using EntityId = std::uint64_t; // 1-based, dense; 0 means "none"

enum class EntityKind { File, Class, Function, Method, Variable, Struct };
enum class RelationKind { Contains, Calls, References, Imports, Inherits };

std::string_view entity_kind_name(EntityKind k);
std::string_view relation_kind_name(RelationKind k);
std::optional<EntityKind> entity_kind_from(std::string_view name);
std::optional<RelationKind> relation_kind_from(std::string_view name);

struct SourceSpan {
    std::string path; // repo-relative, '/' separators
    long start_line = 1;
    long end_line = 1;
};

struct CodeEntity {
    EntityId id = 0;
    EntityKind kind = EntityKind::File;
    std::string name;
    SourceSpan location;
    std::string signature; // empty = none
    std::string doc;       // empty = none
};

struct CodeRelation {
    EntityId src = 0;
    EntityId dst = 0;
    RelationKind kind = RelationKind::Contains;
    std::string site_path;
    long site_line = 0;
};

// Immutable after build; safe for concurrent readers.
class KnowledgeGraph {
public:
    KnowledgeGraph() = default;
    KnowledgeGraph(std::vector<CodeEntity> entities, std::vector<CodeRelation> relations,
                   std::string snapshot_id);

    bool empty() const { return entities_.empty(); }
    const std::string& snapshot_id() const { return snapshot_id_; }
    const std::vector<CodeEntity>& entities() const { return entities_; }
    const std::vector<CodeRelation>& relations() const { return relations_; }

    const CodeEntity* find(EntityId id) const;
    const CodeEntity& entity(EntityId id) const; // throws Error{UnknownEntity}
    std::vector<EntityId> ids_named(std::string_view name) const;

    // All relations touching `id` (both directions), each paired with the
    // far-end entity, ordered by relation kind then site then far id.
    std::vector<std::pair<CodeRelation, CodeEntity>>
    neighbors(EntityId id, const std::set<RelationKind>& kinds = {}) const;

    // Invariant audit; returns human-readable violations (empty = healthy).
    std::vector<std::string> validate() const;

private:
    std::vector<CodeEntity> entities_; // index == id-1
    std::vector<CodeRelation> relations_;
    std::string snapshot_id_;
};

std::vector<std::pair<CodeRelation, CodeEntity>>
neighbors(const KnowledgeGraph& graph, EntityId id, const std::set<RelationKind>& kinds = {});

} // namespace fixcrew::ckg
