// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixcrew/ckg/build.hpp"
#include "fixcrew/ckg/extractor.hpp"
#include "fixcrew/ckg/query.hpp"
#include "fixcrew/ckg/store.hpp"
#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace fs = std::filesystem;
using namespace fixcrew;
using namespace fixcrew::ckg;

namespace {

const fs::path kListing1 = fs::path(FIXCREW_FIXTURE_DIR) / "listing1";

struct TempRepo {
    fs::path root;
    TempRepo() {
        static int counter = 0;
        root = fs::temp_directory_path() /
               ("fixcrew_ckg_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(root);
    }
    ~TempRepo() { fs::remove_all(root); }
    void add(const std::string& rel, const std::string& content) {
        fs::path p = root / rel;
        fs::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << content;
    }
};

const CodeEntity& by_name(const KnowledgeGraph& g, const std::string& name) {
    auto ids = g.ids_named(name);
    REQUIRE_MESSAGE(ids.size() == 1, "expected exactly one entity named " << name);
    return g.entity(ids[0]);
}

bool has_relation(const KnowledgeGraph& g, const std::string& src, const std::string& dst,
                  RelationKind kind) {
    auto s = g.ids_named(src);
    auto d = g.ids_named(dst);
    for (const auto& r : g.relations())
        for (auto si : s)
            for (auto di : d)
                if (r.src == si && r.dst == di && r.kind == kind)
                    return true;
    return false;
}

} // namespace

TEST_CASE("the two-file package fixture produces the documented graph") {
    BuildReport report;
    auto graph = build_graph(kListing1, {}, &report);
    CHECK(report.files_indexed == 2);
    CHECK(report.skipped.empty());
    CHECK(graph.validate().empty());

    std::set<std::string> named;
    for (const auto& e : graph.entities())
        if (e.kind != EntityKind::File)
            named.insert(e.name);
    CHECK(named == std::set<std::string>{"StructA", "FunctionA", "XFunction", "StructB",
                                         "NewStructB", "FunctionB"});

    CHECK(by_name(graph, "StructA").kind == EntityKind::Struct);
    CHECK(by_name(graph, "FunctionA").kind == EntityKind::Method);
    CHECK(by_name(graph, "XFunction").kind == EntityKind::Function);
    CHECK(by_name(graph, "NewStructB").kind == EntityKind::Function);
    CHECK(by_name(graph, "FunctionB").kind == EntityKind::Method);

    CHECK(has_relation(graph, "XFunction", "FunctionB", RelationKind::Calls));
    CHECK(has_relation(graph, "XFunction", "NewStructB", RelationKind::Calls));
    CHECK(has_relation(graph, "FunctionA", "NewStructB", RelationKind::Calls));
    CHECK(has_relation(graph, "fileA.go", "fileB.go", RelationKind::Imports));
    CHECK(has_relation(graph, "StructA", "FunctionA", RelationKind::Contains));
    CHECK(has_relation(graph, "StructB", "FunctionB", RelationKind::Contains));
    CHECK(has_relation(graph, "fileA.go", "XFunction", RelationKind::Contains));

    // "fmt" resolves to nothing indexed; reported, no dangling edge
    CHECK(report.unresolved_imports == 1);

    CHECK(by_name(graph, "XFunction").doc == "XFunction function");
    CHECK(by_name(graph, "FunctionA").signature ==
          "func (a *StructA) FunctionA() pkg_b.StructB");
}

TEST_CASE("an empty directory builds an empty graph") {
    TempRepo repo;
    auto graph = build_graph(repo.root);
    CHECK(graph.empty());
    CHECK(graph.relations().empty());
}

TEST_CASE("a tree with no extractable file is an error") {
    TempRepo repo;
    repo.add("notes.txt", "nothing here\n");
    CHECK_THROWS_AS(build_graph(repo.root), Error);
    try {
        build_graph(repo.root);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoExtractorAvailable);
    }
}

TEST_CASE("an unreadable root is an error") {
    CHECK_THROWS_AS(build_graph(fs::path("/no/such/dir/anywhere")), Error);
}

TEST_CASE("two functions with two call sites") {
    TempRepo repo;
    repo.add("m.py", "def g():\n"
                     "    return 1\n"
                     "\n"
                     "def f():\n"
                     "    a = g()\n"
                     "    b = g()\n"
                     "    return a + b\n");
    auto graph = build_graph(repo.root);
    CHECK(graph.validate().empty());

    int files = 0, functions = 0, contains = 0;
    std::vector<long> call_sites;
    for (const auto& e : graph.entities()) {
        files += e.kind == EntityKind::File;
        functions += e.kind == EntityKind::Function;
    }
    for (const auto& r : graph.relations()) {
        contains += r.kind == RelationKind::Contains;
        if (r.kind == RelationKind::Calls)
            call_sites.push_back(r.site_line);
    }
    CHECK(files == 1);
    CHECK(functions == 2);
    CHECK(contains == 2);
    REQUIRE(call_sites.size() == 2);
    CHECK(call_sites[0] != call_sites[1]); // distinct sites
    CHECK(call_sites[0] == 5);
    CHECK(call_sites[1] == 6);
}

TEST_CASE("rebuilding the same snapshot yields an identical graph") {
    auto g1 = build_graph(kListing1);
    auto g2 = build_graph(kListing1);
    CHECK(g1.snapshot_id() == g2.snapshot_id());
    REQUIRE(g1.entities().size() == g2.entities().size());
    for (std::size_t i = 0; i < g1.entities().size(); ++i) {
        CHECK(g1.entities()[i].id == g2.entities()[i].id);
        CHECK(g1.entities()[i].name == g2.entities()[i].name);
        CHECK(g1.entities()[i].kind == g2.entities()[i].kind);
    }
    REQUIRE(g1.relations().size() == g2.relations().size());
    for (std::size_t i = 0; i < g1.relations().size(); ++i) {
        CHECK(g1.relations()[i].src == g2.relations()[i].src);
        CHECK(g1.relations()[i].dst == g2.relations()[i].dst);
        CHECK(g1.relations()[i].kind == g2.relations()[i].kind);
        CHECK(g1.relations()[i].site_line == g2.relations()[i].site_line);
    }
}

TEST_CASE("a binary file is skipped and reported, not fatal") {
    TempRepo repo;
    repo.add("good.py", "def ok():\n    return 1\n");
    repo.add("bad.py", std::string("def broken():\n\0\xff garbage", 24));
    BuildReport report;
    auto graph = build_graph(repo.root, {}, &report);
    CHECK(report.files_indexed == 1);
    REQUIRE(report.skipped.size() == 1);
    CHECK(report.skipped[0].first == "bad.py");
    CHECK(graph.ids_named("ok").size() == 1);
}

TEST_CASE("python classes, inheritance, docstrings, imports and variables") {
    TempRepo repo;
    repo.add("helpers.py", "def noop():\n    return None\n");
    repo.add("main.py", "\"\"\"Module doc.\"\"\"\n"
                        "import helpers\n"
                        "\n"
                        "MAX_SIZE = 100\n"
                        "\n"
                        "class Base:\n"
                        "    \"\"\"Base doc.\"\"\"\n"
                        "    def ping(self):\n"
                        "        return helpers.noop()\n"
                        "\n"
                        "class Child(Base):\n"
                        "    def pong(self):\n"
                        "        x = MAX_SIZE\n"
                        "        return self.ping()\n");
    BuildReport report;
    auto graph = build_graph(repo.root, {}, &report);
    INFO((report.skipped.empty() ? std::string() : report.skipped[0].second));
    CHECK(graph.validate().empty());

    CHECK(by_name(graph, "Base").kind == EntityKind::Class);
    CHECK(by_name(graph, "Base").doc == "Base doc.");
    CHECK(by_name(graph, "ping").kind == EntityKind::Method);
    CHECK(by_name(graph, "MAX_SIZE").kind == EntityKind::Variable);
    CHECK(by_name(graph, "Child").location.start_line == 11);
    CHECK(by_name(graph, "Child").location.end_line == 14);

    CHECK(has_relation(graph, "Child", "Base", RelationKind::Inherits));
    CHECK(has_relation(graph, "Base", "ping", RelationKind::Contains));
    CHECK(has_relation(graph, "Child", "pong", RelationKind::Contains));
    CHECK(has_relation(graph, "ping", "noop", RelationKind::Calls));
    CHECK(has_relation(graph, "pong", "ping", RelationKind::Calls));
    CHECK(has_relation(graph, "pong", "MAX_SIZE", RelationKind::References));
    CHECK(has_relation(graph, "main.py", "helpers.py", RelationKind::Imports));
}

TEST_CASE("go variables, consts, struct fields and references") {
    TempRepo repo;
    repo.add("app.go", "package main\n"
                       "\n"
                       "var GlobalThing = 3\n"
                       "\n"
                       "const MaxDepth = 7\n"
                       "\n"
                       "type Config struct {\n"
                       "    Name string\n"
                       "    Size int\n"
                       "}\n"
                       "\n"
                       "func Run(c Config) int {\n"
                       "    return c.Size + MaxDepth\n"
                       "}\n");
    auto graph = build_graph(repo.root);
    CHECK(graph.validate().empty());
    CHECK(by_name(graph, "GlobalThing").kind == EntityKind::Variable);
    CHECK(by_name(graph, "MaxDepth").kind == EntityKind::Variable);
    CHECK(by_name(graph, "Config").kind == EntityKind::Struct);
    CHECK(has_relation(graph, "Config", "Name", RelationKind::Contains));
    CHECK(has_relation(graph, "Config", "Size", RelationKind::Contains));
    CHECK(has_relation(graph, "Run", "Config", RelationKind::References));
    CHECK(has_relation(graph, "Run", "MaxDepth", RelationKind::References));
}

TEST_CASE("neighbors lists both directions in stable order") {
    auto graph = build_graph(kListing1);
    const auto& xfn = by_name(graph, "XFunction");

    auto calls = neighbors(graph, xfn.id, {RelationKind::Calls});
    REQUIRE(calls.size() == 2);
    CHECK(calls[0].second.name == "NewStructB");
    CHECK(calls[1].second.name == "FunctionB");
    CHECK(calls[0].first.site_line < calls[1].first.site_line);

    // FunctionB's incoming call shows up from the other side too
    const auto& fnb = by_name(graph, "FunctionB");
    auto incoming = neighbors(graph, fnb.id, {RelationKind::Calls});
    REQUIRE(incoming.size() == 1);
    CHECK(incoming[0].second.name == "XFunction");

    CHECK_THROWS_AS(neighbors(graph, 999999, {}), Error);
}

TEST_CASE("neighbors of an isolated entity is empty") {
    TempRepo repo;
    repo.add("lone.py", "def alone():\n    return 0\n");
    auto graph = build_graph(repo.root);
    const auto& fn = by_name(graph, "alone");
    CHECK(graph.neighbors(fn.id, {RelationKind::Calls}).empty());
}

TEST_CASE("a file's Contains neighbors are exactly its top-level declarations") {
    auto graph = build_graph(kListing1);
    const auto& file = by_name(graph, "fileA.go");
    auto contained = neighbors(graph, file.id, {RelationKind::Contains});
    std::set<std::string> names;
    for (auto& [r, e] : contained)
        names.insert(e.name);
    // FunctionA hangs off StructA, not the file
    CHECK(names == std::set<std::string>{"StructA", "XFunction"});
}

TEST_CASE("query ranks a named entity first with keyword provenance") {
    auto graph = build_graph(kListing1);
    auto result = query_entities(graph, "FunctionB");
    REQUIRE(!result.items.empty());
    const auto& top = result.items[0];
    CHECK(graph.entity(top.id).name == "FunctionB");
    CHECK(top.provenance.count(Provenance::Keyword) == 1);
    CHECK(top.provenance.count(Provenance::EntityRecognition) == 1);
    CHECK(top.score == 1.0);
}

TEST_CASE("an exact unique name lands at rank 1 with score 1.0") {
    auto graph = build_graph(kListing1);
    auto result = query_entities(graph, "XFunction");
    REQUIRE(!result.items.empty());
    CHECK(graph.entity(result.items[0].id).name == "XFunction");
    CHECK(result.items[0].score == 1.0);
}

TEST_CASE("lexical fallback ranks the constructor above the unrelated struct") {
    auto graph = build_graph(kListing1);
    auto result = query_entities(graph, "struct b constructor");
    long pos_new = -1, pos_a = -1;
    for (std::size_t i = 0; i < result.items.size(); ++i) {
        const auto& name = graph.entity(result.items[i].id).name;
        if (name == "NewStructB")
            pos_new = static_cast<long>(i);
        if (name == "StructA")
            pos_a = static_cast<long>(i);
    }
    REQUIRE(pos_new >= 0);
    REQUIRE(pos_a >= 0);
    CHECK(pos_new < pos_a);

    // frozen expectations from the fallback formulas
    const auto& new_b = by_name(graph, "NewStructB");
    CHECK(fallback_similarity("struct b constructor", new_b) == doctest::Approx(0.5));
    CHECK(fallback_keyword_score({"struct", "b", "constructor"}, new_b) ==
          doctest::Approx(2.0 / 3.0));
}

TEST_CASE("query results: scores non-increasing, ids unique, union of strategies") {
    auto graph = build_graph(kListing1);
    for (const std::string q : {"FunctionB", "struct b constructor", "file a go", "new struct"}) {
        auto result = query_entities(graph, q);
        std::set<EntityId> seen;
        for (std::size_t i = 0; i < result.items.size(); ++i) {
            CHECK(seen.insert(result.items[i].id).second);
            if (i > 0)
                CHECK(result.items[i - 1].score >= result.items[i].score);
            CHECK(result.items[i].score >= 0.0);
            CHECK(result.items[i].score <= 1.0);
            CHECK(!result.items[i].provenance.empty());
        }

        // independent recomputation of the three candidate sets
        std::set<EntityId> expected;
        std::vector<std::string> keywords;
        for (const auto& hit : text::identifiers_on_line(q))
            for (const auto& w : text::split_identifier_words(hit.token))
                if (std::find(keywords.begin(), keywords.end(), w) == keywords.end())
                    keywords.push_back(w);
        for (const auto& e : graph.entities()) {
            bool mention = false;
            for (const auto& hit : text::identifiers_on_line(q))
                if (e.name == hit.token || text::to_lower(e.name) == text::to_lower(hit.token))
                    mention = true;
            if (mention || fallback_similarity(q, e) > 0.0 ||
                fallback_keyword_score(keywords, e) > 0.0)
                expected.insert(e.id);
        }
        CHECK(seen == expected);
    }
}

TEST_CASE("a failing similarity scorer degrades to the remaining lists") {
    auto graph = build_graph(kListing1);
    struct Exploding : SimilarityScorer {
        double score(const std::string&, const CodeEntity&) override {
            throw std::runtime_error("model offline");
        }
    } exploding;
    QueryProviders providers;
    providers.similarity = &exploding;
    auto result = query_entities(graph, "FunctionB", providers);
    REQUIRE(!result.items.empty());
    CHECK(graph.entity(result.items[0].id).name == "FunctionB");
    for (const auto& item : result.items)
        CHECK(item.provenance.count(Provenance::Similarity) == 0);
}

TEST_CASE("blank queries are rejected") {
    auto graph = build_graph(kListing1);
    CHECK_THROWS_AS(query_entities(graph, "   "), Error);
}

TEST_CASE("a custom mention recognizer feeds list 1") {
    auto graph = build_graph(kListing1);
    struct Fixed : MentionRecognizer {
        std::vector<std::string> recognize(const std::string&) override { return {"StructB"}; }
    } fixed;
    QueryProviders providers;
    providers.mentions = &fixed;
    auto result = query_entities(graph, "where is the struct built?", providers);
    bool found = false;
    for (const auto& item : result.items)
        if (graph.entity(item.id).name == "StructB" &&
            item.provenance.count(Provenance::EntityRecognition))
            found = true;
    CHECK(found);
}

TEST_CASE("graphs round-trip through the line-delimited store") {
    TempRepo tmp;
    auto graph = build_graph(kListing1);
    fs::path file = tmp.root / "graph.ckg";
    save_graph(graph, file);
    auto loaded = load_graph(file);

    CHECK(loaded.snapshot_id() == graph.snapshot_id());
    REQUIRE(loaded.entities().size() == graph.entities().size());
    for (std::size_t i = 0; i < graph.entities().size(); ++i) {
        const auto& a = graph.entities()[i];
        const auto& b = loaded.entities()[i];
        CHECK(a.id == b.id);
        CHECK(a.kind == b.kind);
        CHECK(a.name == b.name);
        CHECK(a.location.path == b.location.path);
        CHECK(a.location.start_line == b.location.start_line);
        CHECK(a.location.end_line == b.location.end_line);
        CHECK(a.signature == b.signature);
        CHECK(a.doc == b.doc);
    }
    REQUIRE(loaded.relations().size() == graph.relations().size());
    CHECK(loaded.validate().empty());
}

TEST_CASE("the store rejects missing and malformed files") {
    TempRepo tmp;
    CHECK_THROWS_AS(load_graph(tmp.root / "missing.ckg"), Error);
    std::ofstream(tmp.root / "bad.ckg") << "{\"format\":\"something-else\"}\n";
    CHECK_THROWS_AS(load_graph(tmp.root / "bad.ckg"), Error);
    try {
        load_graph(tmp.root / "bad.ckg");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseFailure);
    }
}

TEST_CASE("call sites stay within the caller's span") {
    {
        const fs::path& root = kListing1;
        auto graph = build_graph(root);
        for (const auto& r : graph.relations()) {
            if (r.kind != RelationKind::Calls)
                continue;
            const auto& src = graph.entity(r.src);
            CHECK(r.site_path == src.location.path);
            CHECK(r.site_line >= src.location.start_line);
            CHECK(r.site_line <= src.location.end_line);
        }
    }
}
