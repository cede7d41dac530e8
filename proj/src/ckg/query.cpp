// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/ckg/query.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fixcrew::ckg {

std::string_view provenance_name(Provenance p) {
    switch (p) {
    case Provenance::EntityRecognition: return "EntityRecognition";
    case Provenance::Similarity: return "Similarity";
    case Provenance::Keyword: return "Keyword";
    }
    return "?";
}

int kind_priority(EntityKind kind) {
    switch (kind) {
    case EntityKind::Function: return 0;
    case EntityKind::Method: return 1;
    case EntityKind::Class: return 2;
    case EntityKind::Struct: return 3;
    case EntityKind::Variable: return 4;
    case EntityKind::File: return 5;
    }
    return 6;
}

double fallback_similarity(const std::string& query, const CodeEntity& entity) {
    auto qw = text::query_words(query);
    auto ew = text::split_identifier_words(entity.name);
    std::set<std::string> qs(qw.begin(), qw.end()), es(ew.begin(), ew.end());
    if (qs.empty() || es.empty())
        return 0.0;
    std::size_t inter = 0;
    for (const auto& w : qs)
        inter += es.count(w);
    std::size_t uni = qs.size() + es.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

double fallback_keyword_score(const std::vector<std::string>& keywords, const CodeEntity& entity) {
    if (keywords.empty())
        return 0.0;
    std::string folded = text::to_lower(entity.name);
    std::size_t matched = 0;
    for (const auto& kw : keywords)
        if (folded.find(kw) != std::string::npos)
            ++matched;
    return static_cast<double>(matched) / static_cast<double>(keywords.size());
}

namespace {

std::vector<std::string> fallback_mentions(const std::string& query) {
    std::vector<std::string> out;
    for (const auto& hit : text::identifiers_on_line(query))
        out.push_back(hit.token);
    return out;
}

std::vector<std::string> unique_keywords(const std::string& query) {
    auto words = text::query_words(query);
    std::vector<std::string> out;
    for (auto& w : words)
        if (std::find(out.begin(), out.end(), w) == out.end())
            out.push_back(w);
    return out;
}

struct Candidate {
    std::optional<double> recognition;
    std::optional<double> similarity;
    std::optional<double> keyword;
};

} // namespace

RankedEntityList query_entities(const KnowledgeGraph& graph, const std::string& query,
                                const QueryProviders& providers, const QueryOptions& options) {
    if (text::trim(query).empty())
        throw Error(ErrorCode::EmptyQuery, "query text is blank");
    RankedEntityList result;
    if (graph.empty())
        return result;

    std::map<EntityId, Candidate> merged;
    int failed_lists = 0;
    std::string first_failure;

    // List 1: entity-mention recognition, exact-name lookup.
    try {
        std::vector<std::string> mentions =
            providers.mentions ? providers.mentions->recognize(query) : fallback_mentions(query);
        std::vector<std::string> folded;
        folded.reserve(mentions.size());
        for (const auto& m : mentions)
            folded.push_back(text::to_lower(m));
        for (const auto& e : graph.entities()) {
            double best = 0.0;
            std::string entity_folded = text::to_lower(e.name);
            for (std::size_t i = 0; i < mentions.size(); ++i) {
                if (e.name == mentions[i])
                    best = std::max(best, 1.0);
                else if (entity_folded == folded[i])
                    best = std::max(best, 0.9);
            }
            if (best > 0.0)
                merged[e.id].recognition = best;
        }
    } catch (const std::exception& e) {
        ++failed_lists;
        first_failure = e.what();
    }

    // List 2: similarity scoring.
    try {
        for (const auto& e : graph.entities()) {
            double s = providers.similarity ? providers.similarity->score(query, e)
                                            : fallback_similarity(query, e);
            if (s > 0.0)
                merged[e.id].similarity = std::min(1.0, s);
        }
    } catch (const std::exception& e) {
        ++failed_lists;
        if (first_failure.empty())
            first_failure = e.what();
        for (auto& [id, cand] : merged)
            cand.similarity.reset();
    }

    // List 3: keyword lookup.
    {
        auto keywords = unique_keywords(query);
        for (const auto& e : graph.entities()) {
            double s = fallback_keyword_score(keywords, e);
            if (s > 0.0)
                merged[e.id].keyword = s;
        }
    }

    if (failed_lists >= 2 && merged.empty())
        throw Error(ErrorCode::ScorerFailure, "every candidate strategy failed: " + first_failure);

    for (const auto& [id, cand] : merged) {
        RankedItem item;
        item.id = id;
        if (cand.recognition)
            item.provenance.insert(Provenance::EntityRecognition);
        if (cand.similarity)
            item.provenance.insert(Provenance::Similarity);
        if (cand.keyword)
            item.provenance.insert(Provenance::Keyword);
        const CodeEntity& entity = graph.entity(id);
        if (providers.reranker) {
            item.score = providers.reranker->combine(cand.recognition, cand.similarity,
                                                     cand.keyword, entity);
            item.score = std::clamp(item.score, 0.0, 1.0);
        } else {
            item.score = std::max({cand.recognition.value_or(0.0), cand.similarity.value_or(0.0),
                                   cand.keyword.value_or(0.0)});
        }
        result.items.push_back(std::move(item));
    }

    std::sort(result.items.begin(), result.items.end(),
              [&graph](const RankedItem& a, const RankedItem& b) {
                  if (a.score != b.score)
                      return a.score > b.score;
                  const CodeEntity& ea = graph.entity(a.id);
                  const CodeEntity& eb = graph.entity(b.id);
                  int pa = kind_priority(ea.kind), pb = kind_priority(eb.kind);
                  if (pa != pb)
                      return pa < pb;
                  if (ea.name != eb.name)
                      return ea.name < eb.name;
                  return a.id < b.id;
              });
    if (options.limit > 0 && result.items.size() > options.limit)
        result.items.resize(options.limit);
    return result;
}

} // namespace fixcrew::ckg
