// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixcrew/error.hpp"
#include "fixcrew/nav/lsp/client.hpp"
#include "fixcrew/nav/lsp/framing.hpp"

#include <sstream>

using namespace fixcrew;
using namespace fixcrew::nav;
using namespace fixcrew::nav::lsp;
using nlohmann::json;

TEST_CASE("frames are encoded byte-exactly") {
    json msg = {{"id", 1}, {"jsonrpc", "2.0"}};
    std::string body = "{\"id\":1,\"jsonrpc\":\"2.0\"}";
    CHECK(encode_frame(msg) == "Content-Length: 24\r\n\r\n" + body);
    CHECK(body.size() == 24);
}

TEST_CASE("the reader decodes concatenated frames") {
    json a = {{"id", 1}, {"method", "x"}};
    json b = {{"id", 2}, {"method", "y"}};
    std::istringstream in(encode_frame(a) + encode_frame(b));
    std::ostringstream out;
    StreamTransport transport(in, out);
    FrameReader reader(transport);
    CHECK(reader.read_message(1000) == a);
    CHECK(reader.read_message(1000) == b);
}

TEST_CASE("header names are case-insensitive and extras are ignored") {
    std::string body = "{\"ok\":true}";
    std::string frame = "content-LENGTH: " + std::to_string(body.size()) +
                        "\r\nContent-Type: application/vscode-jsonrpc; charset=utf-8\r\n\r\n" + body;
    std::istringstream in(frame);
    std::ostringstream out;
    StreamTransport transport(in, out);
    FrameReader reader(transport);
    CHECK(reader.read_message(1000) == json{{"ok", true}});
}

TEST_CASE("missing or bad lengths are rejected") {
    std::ostringstream out;
    {
        std::istringstream in("X-Other: 5\r\n\r\nhello");
        StreamTransport t(in, out);
        FrameReader reader(t);
        CHECK_THROWS_AS(reader.read_message(1000), Error);
    }
    {
        std::istringstream in("Content-Length: zap\r\n\r\n");
        StreamTransport t(in, out);
        FrameReader reader(t);
        CHECK_THROWS_AS(reader.read_message(1000), Error);
    }
    {
        std::istringstream in(""); // EOF immediately
        StreamTransport t(in, out);
        FrameReader reader(t);
        CHECK_THROWS_AS(reader.read_message(1000), Error);
    }
}

TEST_CASE("frame round trip preserves the message") {
    json msg = {{"jsonrpc", "2.0"},
                {"id", 42},
                {"method", "textDocument/definition"},
                {"params", {{"position", {{"line", 0}, {"character", 7}}}}}};
    std::istringstream in(encode_frame(msg));
    std::ostringstream out;
    StreamTransport transport(in, out);
    FrameReader reader(transport);
    CHECK(reader.read_message(1000) == msg);
}

TEST_CASE("client speaks to a live server process") {
    std::string server = std::string(FIXCREW_FIXTURE_DIR) + "/fake_lsp_server.py";
    auto transport = std::make_unique<ProcessTransport>(
        std::vector<std::string>{"python3", server});
    LspClient client(std::move(transport), "/workspace", 5000);
    client.initialize();

    SUBCASE("definition positions convert between 1-based and 0-based") {
        ResolvedPosition pos{"src/app.py", 12, 8, "thing", ResolveTier::ExactLine};
        auto defs = client.navigate(NavKind::Definition, pos);
        REQUIRE(defs.size() == 1);
        // server answered with 0-based line 9 / character 4
        CHECK(defs[0].path == "def_target.py");
        CHECK(defs[0].line == 10);
        CHECK(defs[0].column == 5);
    }

    SUBCASE("references echo the request position back, sorted") {
        ResolvedPosition pos{"src/app.py", 3, 2, "thing", ResolveTier::ExactLine};
        auto refs = client.navigate(NavKind::References, pos);
        REQUIRE(refs.size() == 2);
        CHECK(std::is_sorted(refs.begin(), refs.end()));
        bool echoed = false;
        for (const auto& r : refs)
            echoed |= r.path == "src/app.py" && r.line == 3 && r.column == 2;
        CHECK(echoed);
    }

    SUBCASE("diagnostics ride on unsaved overlay content") {
        std::string content = "a\nb\nc = undefined\n";
        auto diags = client.collect("src/app.py", content);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].line == 3);
        CHECK(diags[0].severity == Severity::Error);
        CHECK(diags[0].code == "fake-check");
        CHECK(diags[0].message == "doc has " + std::to_string(content.size()) + " bytes");
    }

    client.shutdown();
}

TEST_CASE("a dead server surfaces as BackendUnavailable") {
    auto transport = std::make_unique<ProcessTransport>(
        std::vector<std::string>{"true"}); // exits immediately
    LspClient client(std::move(transport), "/workspace", 2000);
    CHECK_THROWS_AS(client.initialize(), Error);
}
