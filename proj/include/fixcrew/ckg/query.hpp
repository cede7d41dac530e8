// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#pragma once

#include "fixcrew/ckg/graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fixcrew::ckg {

enum class Provenance { EntityRecognition, Similarity, Keyword };

std::string_view provenance_name(Provenance p);

struct RankedItem {
    EntityId id = 0;
    double score = 0.0;
    std::set<Provenance> provenance;
};

// Scores are non-increasing and ids unique.
struct RankedEntityList {
    std::vector<RankedItem> items;
};

// Pipeline strategy hooks. Each may be backed by a completion provider or an
// embedding model; the shipped fallbacks are deterministic and lexical.
class MentionRecognizer {
public:
    virtual ~MentionRecognizer() = default;
    virtual std::vector<std::string> recognize(const std::string& query) = 0;
};

class SimilarityScorer {
public:
    virtual ~SimilarityScorer() = default;
    virtual double score(const std::string& query, const CodeEntity& entity) = 0; // [0,1]
};

class Reranker {
public:
    virtual ~Reranker() = default;
    virtual double combine(std::optional<double> recognition, std::optional<double> similarity,
                           std::optional<double> keyword, const CodeEntity& entity) = 0;
};

struct QueryProviders {
    MentionRecognizer* mentions = nullptr;  // null: identifier-token fallback
    SimilarityScorer* similarity = nullptr; // null: split-token Jaccard
    Reranker* reranker = nullptr;           // null: max of strategy scores
};

struct QueryOptions {
    std::size_t limit = 0; // 0 = unbounded
};

// Merged, deduplicated union of the three candidate lists (entity-mention
// lookup, similarity, keyword), reranked. A failing strategy drops its list;
// the query only fails when every list fails. Throws Error{EmptyQuery} on a
// blank query.
RankedEntityList query_entities(const KnowledgeGraph& graph, const std::string& query,
                                const QueryProviders& providers = {},
                                const QueryOptions& options = {});

// Fallback scorers, exposed so tests can hand-compute expected rankings.
double fallback_similarity(const std::string& query, const CodeEntity& entity);
double fallback_keyword_score(const std::vector<std::string>& keywords, const CodeEntity& entity);
int kind_priority(EntityKind kind); // lower ranks earlier on ties

} // namespace fixcrew::ckg
